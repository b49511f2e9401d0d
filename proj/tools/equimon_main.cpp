#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equimon/counting.hpp"
#include "equimon/dot.hpp"
#include "equimon/errors.hpp"
#include "equimon/instance.hpp"
#include "equimon/oracle.hpp"

namespace {

std::uint32_t group_order_cap() {
  if (const char* env = std::getenv("EQUIMON_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && value > 0) return static_cast<std::uint32_t>(value);
    std::cerr << "warning: ignoring invalid EQUIMON_MAX_GROUP_ORDER\n";
  }
  return equimon::kDefaultMaxGroupOrder;
}

int cmd_analyze(const std::string& path, std::uint32_t cap) {
  equimon::Instance instance = equimon::load_instance(path, cap);
  std::cout << equimon::analyze_report(instance, cap).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, std::uint32_t cap,
               const equimon::VerifyOptions& options) {
  equimon::Instance instance = equimon::load_instance(path, cap);
  equimon::VerifyOutcome outcome = equimon::verify_report(instance, cap, options);
  std::cout << outcome.report.dump(2) << "\n";
  return outcome.all_passed ? 0 : 1;
}

int cmd_enumerate(const std::string& path, std::uint32_t cap,
                  const std::string& what, std::uint64_t limit) {
  equimon::Instance instance = equimon::load_instance(path, cap);
  const equimon::GSet& gs = instance.gset;
  nlohmann::ordered_json out;
  out["what"] = what;
  nlohmann::ordered_json maps = nlohmann::ordered_json::array();

  if (what == "end") {
    equimon::EndoEnumeration endo =
        equimon::enumerate_endomorphisms(gs, equimon::BigNat{limit});
    out["count"] = endo.count.to_decimal();
    if (endo.maps) {
      for (const equimon::EquivariantMap& m : *endo.maps) maps.push_back(m.images);
    } else {
      out["note"] = "count exceeds --limit; maps omitted";
    }
  } else if (what == "aut") {
    std::vector<equimon::EquivariantMap> auts = equimon::enumerate_automorphisms(gs);
    out["count"] = auts.size();
    for (std::size_t i = 0; i < auts.size() && i < limit; ++i)
      maps.push_back(auts[i].images);
    if (auts.size() > limit) out["note"] = "truncated to --limit maps";
  } else if (what == "collapsings") {
    std::vector<equimon::EquivariantMap> fixes =
        equimon::enumerate_fixing_collapsings(gs);
    out["count"] = fixes.size();
    for (std::size_t i = 0; i < fixes.size() && i < limit; ++i)
      maps.push_back(fixes[i].images);
    if (fixes.size() > limit) out["note"] = "truncated to --limit maps";
  } else {
    throw equimon::Error("--what must be one of end|aut|collapsings");
  }
  out["maps"] = std::move(maps);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_poset(const std::string& path, std::uint32_t cap) {
  equimon::Instance instance = equimon::load_instance(path, cap);
  equimon::BoxDecomposition box(instance.gset, cap);
  std::cout << equimon::poset_dot(box);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equimon: cardinalities of equivariant transformation monoids"};
  app.require_subcommand(1);

  std::string path;
  std::uint64_t verify_cap = 1000000;
  bool skip_closure = false;
  std::string what = "end";
  std::uint64_t limit = 1000;

  CLI::App* analyze = app.add_subcommand("analyze", "report counts for an instance");
  analyze->add_option("file", path, "instance file")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "check every formula against the brute-force oracle");
  verify->add_option("file", path, "instance file")->required();
  verify->add_option("--cap", verify_cap, "oracle materialization/closure bound");
  verify->add_flag("--skip-closure", skip_closure, "skip the generation check");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list equivariant maps explicitly");
  enumerate->add_option("file", path, "instance file")->required();
  enumerate->add_option("--what", what, "end|aut|collapsings");
  enumerate->add_option("--limit", limit, "maximum number of maps to print");

  CLI::App* poset = app.add_subcommand("poset", "emit the box poset as DOT");
  poset->add_option("file", path, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::uint32_t cap = group_order_cap();
  try {
    if (analyze->parsed()) return cmd_analyze(path, cap);
    if (verify->parsed())
      return cmd_verify(path, cap, equimon::VerifyOptions{verify_cap, skip_closure});
    if (enumerate->parsed()) return cmd_enumerate(path, cap, what, limit);
    if (poset->parsed()) return cmd_poset(path, cap);
  } catch (const equimon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
