#include "equimon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>

#include "equimon/errors.hpp"

namespace equimon {

namespace {

std::vector<std::uint32_t> orbit_ids(const GSet& gs) {
  std::vector<std::uint32_t> ids(gs.n_points(), 0);
  std::uint32_t next = 0;
  for (const Orbit& orbit : orbits(gs)) {
    for (Point p : orbit.points) ids[p] = next;
    ++next;
  }
  return ids;
}

/// Pointwise test that G_x <= G_y.
bool stab_below(const GSet& gs, Point x, Point y) {
  for (Elem g = 0; g < gs.group().order(); ++g)
    if (gs.act(g, x) == x && gs.act(g, y) != y) return false;
  return true;
}

/// f(g.rep) = g.target for all g, applied onto `images`.
void write_orbit_image(const GSet& gs, Point rep, Point target,
                       std::vector<Point>& images) {
  for (Elem g = 0; g < gs.group().order(); ++g)
    images[gs.act(g, rep)] = gs.act(g, target);
}

}  // namespace

EquivariantMap identity_map(const GSet& x) {
  std::vector<Point> images(x.n_points());
  std::iota(images.begin(), images.end(), 0);
  return EquivariantMap{std::move(images)};
}

EquivariantMap compose_maps(const EquivariantMap& f, const EquivariantMap& g) {
  std::vector<Point> images(g.images.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = f.images[g.images[i]];
  return EquivariantMap{std::move(images)};
}

bool is_equivariant(const GSet& x, std::span<const Point> images) {
  for (Elem gi : x.group().generator_indices())
    for (Point p = 0; p < x.n_points(); ++p)
      if (images[x.act(gi, p)] != x.act(gi, images[p])) return false;
  return true;
}

bool is_equivariant_full(const GSet& x, std::span<const Point> images) {
  for (Elem g = 0; g < x.group().order(); ++g)
    for (Point p = 0; p < x.n_points(); ++p)
      if (images[x.act(g, p)] != x.act(g, images[p])) return false;
  return true;
}

EquivariantMap collapsing_map(const GSet& gs, Point x, Point y) {
  if (!stab_below(gs, x, y))
    throw Error("stabilizer condition violated: G_x is not contained in G_y");
  EquivariantMap f = identity_map(gs);
  write_orbit_image(gs, x, y, f.images);
  return f;
}

EquivariantMap swap_map(const GSet& gs, Point x, Point y) {
  if (!stab_below(gs, x, y) || !stab_below(gs, y, x))
    throw Error("stabilizer mismatch: G_x and G_y differ");
  EquivariantMap f = identity_map(gs);
  write_orbit_image(gs, x, y, f.images);
  std::vector<std::uint32_t> oid = orbit_ids(gs);
  if (oid[x] != oid[y]) write_orbit_image(gs, y, x, f.images);
  return f;
}

EndoEnumeration enumerate_endomorphisms(const GSet& gs, const BigNat& cap) {
  std::vector<Orbit> orbs = orbits(gs);
  std::vector<std::vector<Point>> targets(orbs.size());
  BigNat count{1};
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    for (Point y = 0; y < gs.n_points(); ++y)
      if (stab_below(gs, orbs[i].representative, y)) targets[i].push_back(y);
    count *= BigNat{targets[i].size()};
  }

  EndoEnumeration out;
  out.count = count;
  if (count <= cap) {
    std::vector<EquivariantMap> maps;
    std::vector<std::size_t> choice(orbs.size(), 0);
    std::vector<Point> images(gs.n_points());
    for (;;) {
      for (std::size_t i = 0; i < orbs.size(); ++i)
        write_orbit_image(gs, orbs[i].representative, targets[i][choice[i]], images);
      maps.push_back(EquivariantMap{images});
      // odometer
      std::size_t pos = orbs.size();
      while (pos > 0) {
        --pos;
        if (++choice[pos] < targets[pos].size()) break;
        choice[pos] = 0;
        if (pos == 0) {
          out.maps = std::move(maps);
          return out;
        }
      }
      if (orbs.empty()) {
        out.maps = std::move(maps);
        return out;
      }
    }
  }

  // Count-only: spot-check a deterministic sample of assignments.
  for (std::uint64_t s = 0; s < 64; ++s) {
    std::vector<Point> images(gs.n_points());
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      std::size_t pick = (s * 2654435761u + 7919 * i) % targets[i].size();
      write_orbit_image(gs, orbs[i].representative, targets[i][pick], images);
    }
    if (!is_equivariant_full(gs, images))
      throw Error("internal: sampled endomorphism is not equivariant");
  }
  return out;
}

std::vector<EquivariantMap> enumerate_endomorphisms_by_filter(const GSet& gs) {
  if (gs.n_points() > 8)
    throw Error("filter-all oracle limited to 8 points");
  std::vector<EquivariantMap> out;
  std::vector<Point> images(gs.n_points(), 0);
  for (;;) {
    if (is_equivariant_full(gs, images)) out.push_back(EquivariantMap{images});
    std::size_t pos = images.size();
    while (pos > 0) {
      --pos;
      if (++images[pos] < gs.n_points()) break;
      images[pos] = 0;
      if (pos == 0) return out;
    }
    if (images.empty()) return out;
  }
}

namespace {

/// Shared backtracking over orbit representatives for automorphisms:
/// targets must have exactly equal stabilizers and lie in an unused orbit.
/// Calls `emit` with the images of every complete assignment; `emit`
/// returns false to abort the search.
template <typename Emit>
void automorphism_search(const GSet& gs, Emit&& emit) {
  std::vector<Orbit> orbs = orbits(gs);
  std::vector<std::uint32_t> oid = orbit_ids(gs);
  std::vector<std::vector<Point>> targets(orbs.size());
  for (std::size_t i = 0; i < orbs.size(); ++i)
    for (Point y = 0; y < gs.n_points(); ++y)
      if (stab_below(gs, orbs[i].representative, y) &&
          stab_below(gs, y, orbs[i].representative))
        targets[i].push_back(y);

  std::vector<bool> orbit_used(orbs.size(), false);
  std::vector<Point> images(gs.n_points());
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (stop) return;
    if (level == orbs.size()) {
      if (!emit(images)) stop = true;
      return;
    }
    for (Point y : targets[level]) {
      if (orbit_used[oid[y]]) continue;
      orbit_used[oid[y]] = true;
      write_orbit_image(gs, orbs[level].representative, y, images);
      self(self, level + 1);
      orbit_used[oid[y]] = false;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::vector<EquivariantMap> enumerate_automorphisms(const GSet& gs) {
  std::vector<EquivariantMap> out;
  automorphism_search(gs, [&](const std::vector<Point>& images) {
    out.push_back(EquivariantMap{images});
    return true;
  });
  return out;
}

std::uint64_t count_automorphisms_direct(const GSet& gs, std::uint64_t cap) {
  std::uint64_t count = 0;
  bool exceeded = false;
  automorphism_search(gs, [&](const std::vector<Point>&) {
    if (++count > cap) {
      exceeded = true;
      return false;
    }
    return true;
  });
  if (exceeded) throw CapExceeded("cap exceeded: more than " +
                                  std::to_string(cap) + " automorphisms");
  return count;
}

bool forms_group(const GSet& gs, const std::vector<EquivariantMap>& maps) {
  std::set<std::vector<Point>> pool;
  for (const EquivariantMap& m : maps) pool.insert(m.images);
  if (!pool.count(identity_map(gs).images)) return false;
  for (const EquivariantMap& a : maps) {
    bool has_inverse = false;
    for (const EquivariantMap& b : maps) {
      if (!pool.count(compose_maps(a, b).images)) return false;
      if (compose_maps(a, b).images == identity_map(gs).images) has_inverse = true;
    }
    if (!has_inverse) return false;
  }
  return true;
}

std::optional<CollapsingType> classify_collapsing(const GSet& gs,
                                                  const EquivariantMap& f) {
  const GroupTable& g = gs.group();
  const Point n = gs.n_points();

  std::vector<bool> in_image(n, false);
  for (Point p = 0; p < n; ++p) in_image[f.images[p]] = true;
  bool bijective = std::all_of(in_image.begin(), in_image.end(),
                               [](bool b) { return b; });
  if (bijective) return std::nullopt;  // collapsings are non-bijective

  std::vector<std::uint32_t> oid = orbit_ids(gs);
  std::vector<Subgroup> stab(n, Subgroup{ElemSet{g.order()}});
  for (Point p = 0; p < n; ++p) stab[p] = stabilizer(gs, p);

  std::vector<bool> actual_ker(static_cast<std::size_t>(n) * n, false);
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      actual_ker[a * n + b] = (f.images[a] == f.images[b]);

  SubgroupLattice lattice(g, g.order());

  for (Point x = 0; x < n; ++x) {
    // Fixing condition first: it pins the collapsed orbit.
    bool fixing = true;
    for (Point p = 0; p < n && fixing; ++p)
      fixing = (oid[p] == oid[x]) ? (f.images[p] != p) : (f.images[p] == p);
    if (!fixing) continue;

    const Subgroup& h = stab[x];
    Subgroup nh = normalizer(g, h);
    NConjClass k_class = n_conjugacy_class(g, stab[f.images[x]], nh);

    for (Point y = 0; y < n; ++y) {
      if (oid[y] == oid[x]) continue;                                    // (i)
      if (n_conjugacy_class(g, stab[y], nh) != k_class) continue;        // (iii)

      // (iv): the kernel must match the three-part union literally.
      std::vector<bool> expected(static_cast<std::size_t>(n) * n, false);
      for (Point p = 0; p < n; ++p) expected[p * n + p] = true;
      for (Elem e = 0; e < g.order(); ++e) {
        Point gx = gs.act(e, x), gy = gs.act(e, y);
        expected[gx * n + gy] = true;
        expected[gy * n + gx] = true;
      }
      for (Elem e1 = 0; e1 < g.order(); ++e1)
        for (Elem e2 = 0; e2 < g.order(); ++e2)
          if (stab[y].contains(g.mul(g.inv(e2), e1)))
            expected[gs.act(e1, x) * n + gs.act(e2, x)] = true;
      if (expected != actual_ker) continue;

      // Canonicalize the type onto the class representative of [H].
      std::uint32_t h_class = lattice.class_id_of(h);
      const Subgroup& h0 = lattice.classes()[h_class].representative;
      Elem transport = 0;
      for (Elem e = 0; e < g.order(); ++e) {
        if (conjugate_subgroup(g, h, e) == h0) {
          transport = e;
          break;
        }
      }
      NConjClass canonical;
      for (const Subgroup& t : k_class)
        canonical.push_back(conjugate_subgroup(g, t, transport));
      std::sort(canonical.begin(), canonical.end());
      return CollapsingType{h_class, h0, std::move(canonical)};
    }
  }
  return std::nullopt;
}

std::vector<EquivariantMap> enumerate_fixing_collapsings(const GSet& gs) {
  std::vector<std::uint32_t> oid = orbit_ids(gs);
  std::set<std::vector<Point>> seen;
  std::vector<EquivariantMap> out;
  for (Point x = 0; x < gs.n_points(); ++x)
    for (Point y = 0; y < gs.n_points(); ++y) {
      if (oid[x] == oid[y] || !stab_below(gs, x, y)) continue;
      EquivariantMap f = collapsing_map(gs, x, y);
      if (seen.insert(f.images).second) out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CollapsingType> enumerate_collapsing_types(const GSet& gs) {
  std::vector<CollapsingType> types;
  for (const EquivariantMap& f : enumerate_fixing_collapsings(gs)) {
    std::optional<CollapsingType> type = classify_collapsing(gs, f);
    if (!type)
      throw Error("internal: fixing collapsing failed classification");
    types.push_back(std::move(*type));
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

namespace {

std::uint64_t pack_map(const std::vector<Point>& images) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    packed |= static_cast<std::uint64_t>(images[i]) << (4 * i);
  return packed;
}

std::vector<Point> unpack_map(std::uint64_t packed, Point n) {
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i) images[i] = (packed >> (4 * i)) & 0xF;
  return images;
}

std::uint64_t compose_packed(std::uint64_t f, std::uint64_t g, Point n) {
  std::uint64_t out = 0;
  for (Point i = 0; i < n; ++i) {
    std::uint64_t gi = (g >> (4 * i)) & 0xF;
    out |= ((f >> (4 * gi)) & 0xF) << (4 * i);
  }
  return out;
}

/// Worklist closure on nibble-packed maps; only valid for n_points <= 16.
std::vector<EquivariantMap> closure_packed(const GSet& gs,
                                           const std::vector<EquivariantMap>& seed,
                                           std::uint64_t cap) {
  const Point n = gs.n_points();
  std::unordered_set<std::uint64_t> known;
  std::vector<std::uint64_t> elements;
  std::queue<std::uint64_t> frontier;
  auto add = [&](std::uint64_t m) {
    if (known.insert(m).second) {
      if (known.size() > cap) throw CapExceeded("cap exceeded: monoid closure");
      elements.push_back(m);
      frontier.push(m);
    }
  };
  add(pack_map(identity_map(gs).images));
  for (const EquivariantMap& m : seed) add(pack_map(m.images));
  while (!frontier.empty()) {
    std::uint64_t cur = frontier.front();
    frontier.pop();
    std::size_t count_now = elements.size();
    for (std::size_t i = 0; i < count_now; ++i) {
      add(compose_packed(cur, elements[i], n));
      add(compose_packed(elements[i], cur, n));
    }
  }
  std::vector<EquivariantMap> out;
  out.reserve(elements.size());
  for (std::uint64_t m : known) out.push_back(EquivariantMap{unpack_map(m, n)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EquivariantMap> monoid_closure(const GSet& gs,
                                           const std::vector<EquivariantMap>& seed,
                                           std::uint64_t cap) {
  for (const EquivariantMap& m : seed)
    if (m.images.size() != gs.n_points() || !is_equivariant(gs, m.images))
      throw Error("seed map is not an equivariant map on this G-set");
  if (gs.n_points() <= 16) return closure_packed(gs, seed, cap);

  std::set<std::vector<Point>> known;
  std::vector<std::vector<Point>> elements;
  std::queue<std::vector<Point>> frontier;
  auto add = [&](std::vector<Point> m) {
    if (known.insert(m).second) {
      if (known.size() > cap) throw CapExceeded("cap exceeded: monoid closure");
      elements.push_back(m);
      frontier.push(std::move(m));
    }
  };
  add(identity_map(gs).images);
  for (const EquivariantMap& m : seed) add(m.images);
  while (!frontier.empty()) {
    std::vector<Point> cur = frontier.front();
    frontier.pop();
    std::size_t count_now = elements.size();
    for (std::size_t i = 0; i < count_now; ++i) {
      std::vector<Point> ab(cur.size()), ba(cur.size());
      for (std::size_t p = 0; p < cur.size(); ++p) {
        ab[p] = cur[elements[i][p]];
        ba[p] = elements[i][cur[p]];
      }
      add(std::move(ab));
      add(std::move(ba));
    }
  }
  std::vector<EquivariantMap> out;
  for (const std::vector<Point>& m : known) out.push_back(EquivariantMap{m});
  return out;
}

}  // namespace equimon
