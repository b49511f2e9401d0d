#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "equimon/errors.hpp"
#include "equimon/subgroup.hpp"
#include "helpers.hpp"

using namespace equimon;
namespace et = equimon::testing;

namespace {

/// Independent oracle: every subset of element indices that contains the
/// identity and is closed under multiplication and inversion. Only viable
/// for tiny groups (2^order subsets).
std::vector<ElemSet> subgroups_by_subset_filter(const GroupTable& g) {
  std::vector<ElemSet> out;
  const std::uint32_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      if (!((mask >> g.inv(a)) & 1)) closed = false;
      for (Elem b = 0; b < n && closed; ++b) {
        if (!((mask >> b) & 1)) continue;
        if (!((mask >> g.mul(a, b)) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    ElemSet set{n};
    for (Elem a = 0; a < n; ++a)
      if ((mask >> a) & 1) set.set(a);
    out.push_back(set);
  }
  return out;
}

Subgroup span_of(const GroupTable& g, std::vector<Elem> seed) {
  return subgroup_generated(g, seed);
}

}  // namespace

TEST_CASE("subgroup_generated") {
  GroupTable g = et::s3();
  CHECK(span_of(g, {}) == trivial_subgroup(g));
  Elem three_cycle = et::index_of(g, perm_from_cycles(3, {{0, 1, 2}}));
  CHECK(span_of(g, {three_cycle}).size() == 3);
  std::vector<Elem> gens = g.generator_indices();
  CHECK(span_of(g, gens) == full_subgroup(g));
}

TEST_CASE("all_subgroups agrees with the subset-filter oracle") {
  for (const GroupTable& g : {et::z2(), et::s3(), et::d4(), et::trivial_group()}) {
    std::vector<ElemSet> expected = subgroups_by_subset_filter(g);
    std::vector<Subgroup> got = all_subgroups(g);
    REQUIRE(got.size() == expected.size());
    std::set<ElemSet> expected_set(expected.begin(), expected.end());
    for (const Subgroup& h : got) CHECK(expected_set.count(h.members) == 1);
  }
  CHECK(all_subgroups(et::z2()).size() == 2);
  CHECK(all_subgroups(et::s3()).size() == 6);
  CHECK(all_subgroups(et::trivial_group()).size() == 1);
}

TEST_CASE("subgroup orders divide the group order") {
  for (const GroupTable& g : {et::s3(), et::d4(), et::z6()})
    for (const Subgroup& h : all_subgroups(g)) {
      CHECK(g.order() % h.size() == 0);
      CHECK(h.contains(Elem{0}));
      CHECK(subgroup_generated(g, h.members.members()) == h);
    }
}

TEST_CASE("all_subgroups is sorted and capped") {
  std::vector<Subgroup> subs = all_subgroups(et::d4());
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].size() <= subs[i].size());
    if (subs[i - 1].size() == subs[i].size()) CHECK(subs[i - 1] < subs[i]);
  }
  CHECK_THROWS_WITH_AS(all_subgroups(et::d4(), 4),
                       doctest::Contains("subgroup enumeration refused"), Error);
}

TEST_CASE("conjugation") {
  GroupTable g = et::s3();
  Subgroup h = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1}}))});

  CHECK(conjugate_subgroup(g, h, 0) == h);
  CHECK(conjugate_subgroup(g, full_subgroup(g), 3) == full_subgroup(g));

  // g^-1 h g with g = (0 1 2) and the right-factor-first convention sends
  // (0 1) to (0 2); derived pointwise: z -> g^-1(h(g(z))).
  Elem cycle = et::index_of(g, perm_from_cycles(3, {{0, 1, 2}}));
  Subgroup conj = conjugate_subgroup(g, h, cycle);
  CHECK(conj == span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 2}}))}));

  for (const Subgroup& sub : all_subgroups(g))
    for (Elem e = 0; e < g.order(); ++e)
      CHECK(conjugate_subgroup(g, sub, e).size() == sub.size());
}

TEST_CASE("normalizer") {
  GroupTable g = et::s3();
  CHECK(normalizer(g, trivial_subgroup(g)) == full_subgroup(g));
  CHECK(normalizer(g, full_subgroup(g)) == full_subgroup(g));

  Subgroup h = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1}}))});
  CHECK(normalizer(g, h) == h);  // self-normalizing, size 2

  for (const GroupTable& grp : {et::s3(), et::d4()}) {
    for (const Subgroup& sub : all_subgroups(grp)) {
      Subgroup n = normalizer(grp, sub);
      CHECK(n.contains(sub));
      CHECK(subgroup_generated(grp, n.members.members()) == n);  // a subgroup
    }
  }
}

TEST_CASE("conjugacy classes") {
  {
    std::vector<SubgroupClass> classes = subgroup_conjugacy_classes(et::z2());
    REQUIRE(classes.size() == 2);
    for (const SubgroupClass& c : classes) CHECK(c.members.size() == 1);
  }
  {
    std::vector<SubgroupClass> classes = subgroup_conjugacy_classes(et::s3());
    REQUIRE(classes.size() == 4);
    std::vector<std::uint32_t> sizes, orders;
    for (const SubgroupClass& c : classes) {
      sizes.push_back(static_cast<std::uint32_t>(c.members.size()));
      orders.push_back(c.representative.size());
    }
    CHECK((sizes == std::vector<std::uint32_t>{1, 3, 1, 1}));
    CHECK((orders == std::vector<std::uint32_t>{1, 2, 3, 6}));
  }
  CHECK(subgroup_conjugacy_classes(et::trivial_group()).size() == 1);

  // |class| * |normalizer| = |G|
  for (const GroupTable& g : {et::s3(), et::d4(), et::z6()})
    for (const SubgroupClass& c : subgroup_conjugacy_classes(g))
      for (const Subgroup& m : c.members)
        CHECK(c.members.size() * normalizer(g, m).size() == g.order());
}

TEST_CASE("class representative is the canonically smallest member") {
  for (const GroupTable& g : {et::s3(), et::d4()})
    for (const SubgroupClass& c : subgroup_conjugacy_classes(g))
      for (const Subgroup& m : c.members)
        CHECK_FALSE(m < c.representative);
}

TEST_CASE("class partial order") {
  GroupTable g = et::s3();
  std::vector<SubgroupClass> classes = subgroup_conjugacy_classes(g);
  auto class_of_order = [&](std::uint32_t n) -> const SubgroupClass& {
    for (const SubgroupClass& c : classes)
      if (c.representative.size() == n) return c;
    throw std::runtime_error("missing class");
  };

  for (const SubgroupClass& c : classes) {
    CHECK(class_leq(g, class_of_order(1), c));  // [{e}] below everything
    CHECK(class_leq(g, c, class_of_order(6)));
  }
  CHECK(class_leq(g, class_of_order(2), class_of_order(6)));
  CHECK_FALSE(class_leq(g, class_of_order(3), class_of_order(2)));

  // reflexive, antisymmetric, transitive, exhaustively
  for (const GroupTable& grp : {et::s3(), et::d4(), et::z6(), et::s4()}) {
    std::vector<SubgroupClass> cls = subgroup_conjugacy_classes(grp);
    for (const SubgroupClass& a : cls) {
      CHECK(class_leq(grp, a, a));
      for (const SubgroupClass& b : cls) {
        if (a.class_id != b.class_id)
          CHECK_FALSE((class_leq(grp, a, b) && class_leq(grp, b, a)));
        for (const SubgroupClass& c : cls)
          if (class_leq(grp, a, b) && class_leq(grp, b, c))
            CHECK(class_leq(grp, a, c));
      }
    }
  }
}

TEST_CASE("finite groups admit no proper self-conjugate containment") {
  for (const GroupTable& g : {et::s3(), et::d4()})
    for (const Subgroup& h : all_subgroups(g))
      for (Elem e = 0; e < g.order(); ++e) {
        Subgroup conj = conjugate_subgroup(g, h, e);
        if (conj.contains(h)) CHECK(conj == h);
      }
}

TEST_CASE("n_conjugacy_class") {
  GroupTable g = et::s3();
  Subgroup h = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1}}))});

  CHECK(n_conjugacy_class(g, h, normalizer(g, h)) == NConjClass{h});
  CHECK(n_conjugacy_class(g, h, trivial_subgroup(g)) == NConjClass{h});
  CHECK(n_conjugacy_class(g, h, full_subgroup(g)).size() == 3);

  // [H]_N is always inside the full class [H], and |[H]_{N_H}| = 1.
  for (const Subgroup& sub : all_subgroups(g)) {
    std::set<ElemSet> full_class;
    for (Elem e = 0; e < g.order(); ++e)
      full_class.insert(conjugate_subgroup(g, sub, e).members);
    for (const Subgroup& n : all_subgroups(g))
      for (const Subgroup& m : n_conjugacy_class(g, sub, n))
        CHECK(full_class.count(m.members) == 1);
    CHECK(n_conjugacy_class(g, sub, normalizer(g, sub)).size() == 1);
  }
}

TEST_CASE("u_set") {
  GroupTable g = et::s3();
  for (const Subgroup& h : all_subgroups(g)) {
    std::vector<NConjClass> self = u_set(g, h, h);
    REQUIRE(self.size() == 1);
    CHECK(self.front() == NConjClass{h});  // |U(H,H)| = 1
  }

  GroupTable z2 = et::z2();
  CHECK(u_set(z2, trivial_subgroup(z2), full_subgroup(z2)).size() == 1);

  Subgroup a3 = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1, 2}}))});
  Subgroup t = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1}}))});
  CHECK(u_set(g, a3, t).empty());  // no containment: |U| = 0

  // u_set depends only on the class of K.
  for (Elem e = 0; e < g.order(); ++e)
    CHECK(u_set(g, trivial_subgroup(g), conjugate_subgroup(g, t, e)) ==
          u_set(g, trivial_subgroup(g), t));
}

TEST_CASE("u_union") {
  GroupTable g = et::s3();
  CHECK(u_union(g, full_subgroup(g)) ==
        std::vector<NConjClass>{NConjClass{full_subgroup(g)}});

  GroupTable z2 = et::z2();
  CHECK(u_union(z2, trivial_subgroup(z2)).size() == 2);
  CHECK(u_union(g, trivial_subgroup(g)).size() == 4);

  // U(H) is the disjoint union of U(H,K) over class representatives K.
  for (const GroupTable& grp : {et::s3(), et::d4()}) {
    for (const Subgroup& h : all_subgroups(grp)) {
      std::vector<NConjClass> whole = u_union(grp, h);
      std::vector<NConjClass> pieces;
      for (const SubgroupClass& c : subgroup_conjugacy_classes(grp))
        for (NConjClass& cls : u_set(grp, h, c.representative))
          pieces.push_back(std::move(cls));
      std::sort(pieces.begin(), pieces.end());
      std::sort(whole.begin(), whole.end());
      CHECK(pieces == whole);
    }
  }
}

TEST_CASE("N-class cardinality is preserved when the pair (H, K) is conjugated") {
  for (const GroupTable& g : {et::s3(), et::d4()}) {
    std::vector<Subgroup> subs = all_subgroups(g);
    for (const Subgroup& h : subs)
      for (const Subgroup& k : subs)
        for (Elem e = 0; e < g.order(); ++e) {
          Elem inv = g.inv(e);
          Subgroup hc = conjugate_subgroup(g, h, inv);  // g h g^-1
          Subgroup kc = conjugate_subgroup(g, k, inv);
          CHECK(n_conjugacy_class(g, k, normalizer(g, h)).size() ==
                n_conjugacy_class(g, kc, normalizer(g, hc)).size());
        }
  }
}

TEST_CASE("conjugating K alone can change the N_H-class cardinality") {
  // With H = K = <(0 1)> in S3 and g = (1 2), gKg^-1 = <(0 2)> and the
  // N_H-class sizes differ (1 vs 2). This is why type canonicalization
  // transports H and K together.
  GroupTable g = et::s3();
  Subgroup h = span_of(g, {et::index_of(g, perm_from_cycles(3, {{0, 1}}))});
  Subgroup nh = normalizer(g, h);
  Elem e = et::index_of(g, perm_from_cycles(3, {{1, 2}}));
  Subgroup kc = conjugate_subgroup(g, h, g.inv(e));
  CHECK(n_conjugacy_class(g, h, nh).size() == 1);
  CHECK(n_conjugacy_class(g, kc, nh).size() == 2);
}
