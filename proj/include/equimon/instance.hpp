#ifndef EQUIMON_INSTANCE_HPP
#define EQUIMON_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "equimon/counting.hpp"
#include "equimon/gset.hpp"

namespace equimon {

/// A parsed instance file: the group plus the G-set it acts on.
///
/// File format (JSON):
///   {
///     "group":  { "degree": d, "generators": [[...], ...] },
///     "action": { "generator_images": [[...], ...] }            // one form
///               { "generator_images": [], "n_points": n }       //   (trivial group)
///               { "coset_spaces": [ [[0],[1,1]], [] ] }         // other form
///   }
/// Each coset space is a subgroup given by a list of words; a word is an
/// array of generator indices and multiplies left to right (empty word =
/// identity, empty word list = trivial subgroup).
struct Instance {
  GroupTable group;
  GSet gset;
};

Instance parse_instance(const nlohmann::json& doc, std::uint32_t max_group_order);
Instance load_instance(const std::string& path, std::uint32_t max_group_order);

/// The analyze report: instance summary, box table, counts. Key order is
/// fixed and values are deterministic, so reports are byte-stable.
nlohmann::ordered_json analyze_report(const Instance& instance, std::uint32_t cap);

struct VerifyOptions {
  std::uint64_t cap = 1000000;  // materialization / closure bound
  bool skip_closure = false;
};

struct VerifyOutcome {
  nlohmann::ordered_json report;
  bool all_passed = true;
};

/// Runs the four formula-vs-oracle comparisons plus the generation check
/// against the supplied formula report (normally cardinality_report(box);
/// tests inject corrupted values to exercise the failure path).
VerifyOutcome run_verification(const BoxDecomposition& box,
                               const CardinalityReport& formula,
                               const VerifyOptions& options);

/// verify = analyze + verification verdicts appended.
VerifyOutcome verify_report(const Instance& instance, std::uint32_t cap,
                            const VerifyOptions& options);

}  // namespace equimon

#endif
