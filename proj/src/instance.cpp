#include "equimon/instance.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "equimon/dot.hpp"
#include "equimon/errors.hpp"
#include "equimon/oracle.hpp"

namespace equimon {

namespace {

std::vector<Point> parse_image_array(const nlohmann::json& node,
                                     const std::string& where) {
  if (!node.is_array())
    throw Error(where + ": expected an array of point indices");
  std::vector<Point> images;
  images.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number_unsigned())
      throw Error(where + ": expected a non-negative integer");
    images.push_back(v.get<Point>());
  }
  return images;
}

Perm parse_perm(const nlohmann::json& node, const std::string& where) {
  try {
    return Perm{parse_image_array(node, where)};
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(const nlohmann::json& doc, std::uint32_t max_group_order) {
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("action"))
    throw Error("instance must be an object with \"group\" and \"action\"");

  const auto& group_node = doc["group"];
  if (!group_node.is_object() || !group_node.contains("degree") ||
      !group_node.contains("generators"))
    throw Error("group: expected {\"degree\": n, \"generators\": [...]}");
  if (!group_node["degree"].is_number_unsigned() ||
      group_node["degree"].get<std::uint64_t>() == 0)
    throw Error("group.degree: expected a positive integer");
  Point degree = group_node["degree"].get<Point>();

  std::vector<Perm> generators;
  const auto& gens_node = group_node["generators"];
  if (!gens_node.is_array()) throw Error("group.generators: expected an array");
  for (std::size_t i = 0; i < gens_node.size(); ++i)
    generators.push_back(
        parse_perm(gens_node[i], "group.generators[" + std::to_string(i) + "]"));

  GroupTable group = GroupTable::from_generators(generators, degree, max_group_order);

  const auto& action_node = doc["action"];
  if (!action_node.is_object())
    throw Error("action: expected an object");
  bool has_images = action_node.contains("generator_images");
  bool has_cosets = action_node.contains("coset_spaces");
  if (has_images == has_cosets)
    throw Error("action: expected exactly one of \"generator_images\" or "
                "\"coset_spaces\"");

  if (has_images) {
    const auto& images_node = action_node["generator_images"];
    if (!images_node.is_array())
      throw Error("action.generator_images: expected an array");
    std::vector<Perm> images;
    for (std::size_t i = 0; i < images_node.size(); ++i)
      images.push_back(parse_perm(
          images_node[i], "action.generator_images[" + std::to_string(i) + "]"));
    Point n_points = 0;
    if (action_node.contains("n_points")) {
      if (!action_node["n_points"].is_number_unsigned())
        throw Error("action.n_points: expected a non-negative integer");
      n_points = action_node["n_points"].get<Point>();
    }
    GSet gset = GSet::from_generator_action(group, images, n_points);
    return Instance{std::move(group), std::move(gset)};
  }

  const auto& spaces_node = action_node["coset_spaces"];
  if (!spaces_node.is_array())
    throw Error("action.coset_spaces: expected an array of subgroups");
  std::vector<Subgroup> subgroups;
  for (std::size_t i = 0; i < spaces_node.size(); ++i) {
    const auto& words_node = spaces_node[i];
    std::string where = "action.coset_spaces[" + std::to_string(i) + "]";
    if (!words_node.is_array())
      throw Error(where + ": expected an array of generator words");
    std::vector<Elem> seed;
    for (std::size_t w = 0; w < words_node.size(); ++w) {
      const auto& word_node = words_node[w];
      if (!word_node.is_array())
        throw Error(where + "[" + std::to_string(w) +
                    "]: expected an array of generator indices");
      Elem element = 0;  // identity
      for (const auto& idx_node : word_node) {
        if (!idx_node.is_number_unsigned())
          throw Error(where + ": generator index must be a non-negative integer");
        std::size_t idx = idx_node.get<std::size_t>();
        if (idx >= group.generator_indices().size())
          throw Error(where + ": generator index " + std::to_string(idx) +
                      " out of range");
        element = group.mul(element, group.generator_indices()[idx]);
      }
      seed.push_back(element);
    }
    subgroups.push_back(subgroup_generated(group, seed));
  }
  GSet gset = GSet::from_coset_spaces(group, subgroups);
  return Instance{std::move(group), std::move(gset)};
}

Instance load_instance(const std::string& path, std::uint32_t max_group_order) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("parse error in " + path + ": " + e.what());
  }
  return parse_instance(doc, max_group_order);
}

namespace {

/// A small generating set for a subgroup: greedily add members (ascending)
/// until they generate it.
std::vector<Elem> greedy_generators(const GroupTable& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(g);
  for (Elem e : h.members.members()) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = subgroup_generated(g, gens);
    if (span == h) break;
  }
  return gens;
}

nlohmann::ordered_json box_table(const BoxDecomposition& box,
                                 const CardinalityReport& report) {
  const GroupTable& g = box.gset().group();
  nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
  for (std::uint32_t cid : box.stabilizer_class_ids()) {
    nlohmann::ordered_json entry;
    entry["class_id"] = cid;
    entry["subgroup_order"] = box.canonical_rep(cid).size();
    entry["alpha"] = report.alpha.at(cid);
    entry["index"] = report.indices.at(cid);
    entry["options"] = report.per_class_options.at(cid).to_decimal();
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (Elem e : greedy_generators(g, box.canonical_rep(cid)))
      gens.push_back(g.element(e).images());
    entry["representative_generators"] = std::move(gens);
    boxes.push_back(std::move(entry));
  }
  return boxes;
}

}  // namespace

nlohmann::ordered_json analyze_report(const Instance& instance, std::uint32_t cap) {
  BoxDecomposition box(instance.gset, cap);
  CardinalityReport counts = cardinality_report(box);

  nlohmann::ordered_json report;
  report["instance"]["group_order"] = instance.group.order();
  report["instance"]["group_degree"] = instance.group.degree();
  report["instance"]["n_points"] = instance.gset.n_points();
  report["instance"]["orbit_count"] = box.orbit_list().size();
  report["boxes"] = box_table(box, counts);
  report["counts"]["end"] = counts.end_count.to_decimal();
  report["counts"]["aut"] = counts.aut_count.to_decimal();
  report["counts"]["fixing_collapsings"] = counts.fixing_collapsing_count.to_decimal();
  report["counts"]["collapsing_types"] = counts.collapsing_type_count;
  report["counts"]["u_total"] = counts.u_total;
  report["counts"]["kappa_implied"] = counts.kappa_implied;
  return report;
}

VerifyOutcome run_verification(const BoxDecomposition& box,
                               const CardinalityReport& formula,
                               const VerifyOptions& options) {
  const GSet& gs = box.gset();
  VerifyOutcome outcome;
  outcome.report = nlohmann::ordered_json::array();

  auto record = [&](const std::string& check, const std::string& verdict,
                    const std::string& formula_value,
                    const std::string& oracle_value) {
    nlohmann::ordered_json entry;
    entry["check"] = check;
    entry["verdict"] = verdict;
    entry["formula"] = formula_value;
    entry["oracle"] = oracle_value;
    outcome.report.push_back(std::move(entry));
    if (verdict == "fail") outcome.all_passed = false;
  };

  EndoEnumeration endo = enumerate_endomorphisms(gs, BigNat{options.cap});
  record("endomorphism_count",
         endo.count == formula.end_count ? "pass" : "fail",
         formula.end_count.to_decimal(), endo.count.to_decimal());

  try {
    std::uint64_t auts = count_automorphisms_direct(gs, options.cap);
    record("automorphism_count",
           BigNat{auts} == formula.aut_count ? "pass" : "fail",
           formula.aut_count.to_decimal(), BigNat{auts}.to_decimal());
  } catch (const CapExceeded&) {
    record("automorphism_count", "skipped", formula.aut_count.to_decimal(),
           "cap exceeded");
  }

  std::vector<EquivariantMap> collapsings = enumerate_fixing_collapsings(gs);
  record("fixing_collapsing_count",
         BigNat{collapsings.size()} == formula.fixing_collapsing_count ? "pass"
                                                                       : "fail",
         formula.fixing_collapsing_count.to_decimal(),
         std::to_string(collapsings.size()));

  std::size_t types = enumerate_collapsing_types(gs).size();
  record("collapsing_type_count",
         types == formula.collapsing_type_count ? "pass" : "fail",
         std::to_string(formula.collapsing_type_count), std::to_string(types));

  if (options.skip_closure) {
    record("generation_closure", "skipped", formula.end_count.to_decimal(),
           "disabled");
  } else if (formula.end_count > BigNat{options.cap}) {
    record("generation_closure", "skipped", formula.end_count.to_decimal(),
           "cap exceeded");
  } else {
    std::vector<EquivariantMap> seed = enumerate_automorphisms(gs);
    for (EquivariantMap& m : collapsings) seed.push_back(std::move(m));
    try {
      std::vector<EquivariantMap> closure = monoid_closure(gs, seed, options.cap);
      record("generation_closure",
             BigNat{closure.size()} == formula.end_count ? "pass" : "fail",
             formula.end_count.to_decimal(), std::to_string(closure.size()));
    } catch (const CapExceeded&) {
      record("generation_closure", "skipped", formula.end_count.to_decimal(),
             "cap exceeded");
    }
  }
  return outcome;
}

VerifyOutcome verify_report(const Instance& instance, std::uint32_t cap,
                            const VerifyOptions& options) {
  BoxDecomposition box(instance.gset, cap);
  CardinalityReport counts = cardinality_report(box);
  VerifyOutcome verification = run_verification(box, counts, options);

  VerifyOutcome outcome;
  outcome.all_passed = verification.all_passed;
  outcome.report = analyze_report(instance, cap);
  outcome.report["verification"] = std::move(verification.report);
  return outcome;
}

}  // namespace equimon
