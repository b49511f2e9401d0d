#include "equimon/counting.hpp"

#include <cstdint>

namespace equimon {

namespace {

/// Total number of subgroups T with H <= T and T conjugate to K, i.e. the
/// sum of |[T]_{N_H}| over the classes in U(H,K). When every class in
/// U(H,K) has the same cardinality this equals |[K]_{N_H}| * |U(H,K)|; the
/// summed form stays correct when the class sizes differ.
std::uint64_t overgroups_in_class(const GroupTable& g, const Subgroup& h,
                                  const Subgroup& k) {
  std::uint64_t total = 0;
  for (const NConjClass& cls : u_set(g, h, k)) total += cls.size();
  return total;
}

}  // namespace

BigNat target_options(const BoxDecomposition& box, std::uint32_t class_id) {
  const GroupTable& g = box.gset().group();
  const Subgroup& h = box.canonical_rep(class_id);
  std::uint64_t total = 0;
  for (std::uint32_t k_id : box.stabilizer_class_ids()) {
    if (!box.leq(class_id, k_id)) continue;
    total += static_cast<std::uint64_t>(box.alpha(k_id)) * box.index_n_h(k_id) *
             overgroups_in_class(g, h, box.canonical_rep(k_id));
  }
  return BigNat{total};
}

BigNat count_endomorphisms(const BoxDecomposition& box) {
  BigNat result{1};
  for (std::uint32_t cid : box.stabilizer_class_ids())
    result *= BigNat::pow(target_options(box, cid), box.alpha(cid));
  return result;
}

BigNat count_automorphisms(const BoxDecomposition& box) {
  BigNat result{1};
  for (std::uint32_t cid : box.stabilizer_class_ids()) {
    result *= BigNat::factorial(box.alpha(cid));
    result *= BigNat::pow(BigNat{box.index_n_h(cid)}, box.alpha(cid));
  }
  return result;
}

BigNat count_fixing_collapsings(const BoxDecomposition& box) {
  const GroupTable& g = box.gset().group();
  std::uint64_t total = 0;
  for (std::uint32_t cid : box.stabilizer_class_ids()) {
    const Subgroup& h = box.canonical_rep(cid);
    std::uint64_t inner = 0;
    for (std::uint32_t k_id : box.stabilizer_class_ids()) {
      if (k_id == cid || !box.leq(cid, k_id)) continue;
      inner += static_cast<std::uint64_t>(box.alpha(k_id)) * box.index_n_h(k_id) *
               overgroups_in_class(g, h, box.canonical_rep(k_id));
    }
    inner += static_cast<std::uint64_t>(box.alpha(cid) - 1) * box.index_n_h(cid);
    total += box.alpha(cid) * inner;
  }
  return BigNat{total};
}

std::uint64_t count_collapsing_types(const BoxDecomposition& box) {
  const GroupTable& g = box.gset().group();
  std::uint64_t types = 0;
  for (std::uint32_t cid : box.stabilizer_class_ids()) {
    for (const NConjClass& cls : u_union(g, box.canonical_rep(cid))) {
      std::uint32_t k_class = box.lattice().class_id_of(cls.front());
      bool occurs = false;
      for (std::uint32_t sid : box.stabilizer_class_ids()) occurs |= (sid == k_class);
      if (!occurs) continue;
      if (k_class == cid && box.alpha(cid) < 2) continue;
      ++types;
    }
  }
  return types;
}

CardinalityReport cardinality_report(const BoxDecomposition& box) {
  const GroupTable& g = box.gset().group();
  CardinalityReport report;
  report.end_count = BigNat{1};
  report.aut_count = BigNat{1};
  for (std::uint32_t cid : box.stabilizer_class_ids()) {
    BigNat options = target_options(box, cid);
    report.end_count *= BigNat::pow(options, box.alpha(cid));
    report.aut_count *= BigNat::factorial(box.alpha(cid)) *
                        BigNat::pow(BigNat{box.index_n_h(cid)}, box.alpha(cid));
    report.per_class_options.emplace(cid, std::move(options));
    report.alpha.emplace(cid, box.alpha(cid));
    report.indices.emplace(cid, box.index_n_h(cid));
    report.u_total += u_union(g, box.canonical_rep(cid)).size();
  }
  report.fixing_collapsing_count = count_fixing_collapsings(box);
  report.collapsing_type_count = count_collapsing_types(box);
  report.kappa_implied = report.u_total - report.collapsing_type_count;
  return report;
}

}  // namespace equimon
