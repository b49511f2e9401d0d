#include "equimon/subgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "equimon/errors.hpp"

namespace equimon {

Subgroup trivial_subgroup(const GroupTable& g) {
  Subgroup s{ElemSet{g.order()}};
  s.members.set(0);
  return s;
}

Subgroup full_subgroup(const GroupTable& g) {
  Subgroup s{ElemSet{g.order()}};
  for (Elem e = 0; e < g.order(); ++e) s.members.set(e);
  return s;
}

Subgroup subgroup_generated(const GroupTable& g, std::span<const Elem> seed) {
  Subgroup s = trivial_subgroup(g);
  std::vector<Elem> worklist{0};
  for (Elem e : seed) {
    if (e >= g.order()) throw Error("element index out of range");
    if (!s.members.test(e)) {
      s.members.set(e);
      worklist.push_back(e);
    }
  }
  // Close under multiplication; finiteness supplies inverses.
  std::vector<Elem> known = s.members.members();
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    Elem a = worklist[i];
    std::size_t known_now = known.size();
    for (std::size_t j = 0; j < known_now; ++j) {
      for (Elem p : {g.mul(a, known[j]), g.mul(known[j], a)}) {
        if (!s.members.test(p)) {
          s.members.set(p);
          worklist.push_back(p);
          known.push_back(p);
        }
      }
    }
  }
  return s;
}

namespace {

std::vector<Subgroup> join_closure(const GroupTable& g,
                                   std::vector<Subgroup> seeds) {
  // Joins every known subgroup with every cyclic subgroup until fixpoint.
  std::vector<Subgroup> cyclics;
  {
    std::set<ElemSet> seen;
    for (Elem e = 0; e < g.order(); ++e) {
      Subgroup c = subgroup_generated(g, std::span<const Elem>{&e, 1});
      if (seen.insert(c.members).second) cyclics.push_back(std::move(c));
    }
  }

  std::set<ElemSet> known;
  std::vector<Subgroup> result;
  std::vector<Subgroup> frontier;
  auto add = [&](Subgroup s) {
    if (known.insert(s.members).second) {
      result.push_back(s);
      frontier.push_back(std::move(s));
    }
  };
  for (Subgroup& s : seeds) add(std::move(s));

  while (!frontier.empty()) {
    std::vector<Subgroup> batch;
    batch.swap(frontier);
    for (const Subgroup& a : batch) {
      for (const Subgroup& c : cyclics) {
        if (a.contains(c)) continue;
        std::vector<Elem> seed = a.members.members();
        for (Elem e : c.members.members()) seed.push_back(e);
        add(subgroup_generated(g, seed));
      }
    }
  }

  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupTable& g, std::uint32_t cap) {
  if (g.order() > cap)
    throw Error("subgroup enumeration refused: group order " +
                std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  return join_closure(g, {trivial_subgroup(g)});
}

std::vector<Subgroup> overgroups(const GroupTable& g, const Subgroup& h) {
  return join_closure(g, {h});
}

Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h, Elem by) {
  Subgroup out{ElemSet{g.order()}};
  for (Elem e : h.members.members()) out.members.set(g.conj(e, by));
  return out;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  Subgroup out{ElemSet{g.order()}};
  for (Elem e = 0; e < g.order(); ++e)
    if (conjugate_subgroup(g, h, e) == h) out.members.set(e);
  return out;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& g,
                                                      std::uint32_t cap) {
  std::vector<Subgroup> subs = all_subgroups(g, cap);
  std::set<ElemSet> assigned;
  std::vector<SubgroupClass> classes;
  for (const Subgroup& h : subs) {
    if (assigned.count(h.members)) continue;
    std::set<ElemSet> orbit;
    for (Elem e = 0; e < g.order(); ++e)
      orbit.insert(conjugate_subgroup(g, h, e).members);
    SubgroupClass cls;
    for (const ElemSet& m : orbit) {
      assigned.insert(m);
      cls.members.push_back(Subgroup{m});
    }
    cls.representative = cls.members.front();  // std::set is sorted canonically
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.representative.size() != b.representative.size())
                return a.representative.size() < b.representative.size();
              return a.representative < b.representative;
            });
  for (std::uint32_t i = 0; i < classes.size(); ++i) classes[i].class_id = i;
  return classes;
}

bool class_leq(const GroupTable& g, const SubgroupClass& a, const SubgroupClass& b) {
  (void)g;
  for (const Subgroup& m : b.members)
    if (m.contains(a.representative)) return true;
  return false;
}

NConjClass n_conjugacy_class(const GroupTable& g, const Subgroup& h,
                             const Subgroup& n) {
  std::set<ElemSet> orbit;
  for (Elem e : n.members.members()) orbit.insert(conjugate_subgroup(g, h, e).members);
  NConjClass out;
  for (const ElemSet& m : orbit) out.push_back(Subgroup{m});
  return out;
}

namespace {

/// Partitions `pool` (overgroups of h) into N_H-conjugacy classes.
std::vector<NConjClass> partition_by_nh(const GroupTable& g, const Subgroup& h,
                                        const std::vector<Subgroup>& pool) {
  Subgroup nh = normalizer(g, h);
  std::set<ElemSet> remaining;
  for (const Subgroup& t : pool) remaining.insert(t.members);
  std::vector<NConjClass> classes;
  while (!remaining.empty()) {
    Subgroup t{*remaining.begin()};
    NConjClass cls = n_conjugacy_class(g, t, nh);
    for (const Subgroup& m : cls) remaining.erase(m.members);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const NConjClass& a, const NConjClass& b) {
              return a.front() < b.front();
            });
  return classes;
}

}  // namespace

std::vector<NConjClass> u_set(const GroupTable& g, const Subgroup& h,
                              const Subgroup& k) {
  std::set<ElemSet> conjugates;
  for (Elem e = 0; e < g.order(); ++e)
    conjugates.insert(conjugate_subgroup(g, k, e).members);
  std::vector<Subgroup> pool;
  for (const ElemSet& m : conjugates) {
    Subgroup t{m};
    if (t.contains(h)) pool.push_back(std::move(t));
  }
  return partition_by_nh(g, h, pool);
}

std::vector<NConjClass> u_union(const GroupTable& g, const Subgroup& h) {
  return partition_by_nh(g, h, overgroups(g, h));
}

SubgroupLattice::SubgroupLattice(const GroupTable& g, std::uint32_t cap)
    : group_(&g),
      subgroups_(all_subgroups(g, cap)),
      classes_(subgroup_conjugacy_classes(g, cap)) {
  const std::size_t k = classes_.size();
  leq_.assign(k * k, false);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      leq_[a * k + b] = class_leq(g, classes_[a], classes_[b]);
}

std::uint32_t SubgroupLattice::class_id_of(const Subgroup& h) const {
  for (const SubgroupClass& cls : classes_) {
    if (cls.representative.size() != h.size()) continue;
    for (const Subgroup& m : cls.members)
      if (m == h) return cls.class_id;
  }
  throw Error("subgroup not found in lattice");
}

}  // namespace equimon
