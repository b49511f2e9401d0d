#include "equimon/dot.hpp"

#include <sstream>

namespace equimon {

std::string poset_dot(const BoxDecomposition& box) {
  const auto& ids = box.stabilizer_class_ids();
  std::ostringstream out;
  out << "digraph box_poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::uint32_t cid : ids) {
    out << "  c" << cid << " [label=\"[H" << cid
        << "]: |H|=" << box.canonical_rep(cid).size()
        << ", alpha=" << box.alpha(cid) << ", [N:H]=" << box.index_n_h(cid)
        << "\"];\n";
  }
  // Covering relations only: a < b with nothing strictly between.
  for (std::uint32_t a : ids) {
    for (std::uint32_t b : ids) {
      if (a == b || !box.leq(a, b)) continue;
      bool covered = true;
      for (std::uint32_t mid : ids) {
        if (mid == a || mid == b) continue;
        if (box.leq(a, mid) && box.leq(mid, b)) {
          covered = false;
          break;
        }
      }
      if (covered) out << "  c" << a << " -> c" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace equimon
