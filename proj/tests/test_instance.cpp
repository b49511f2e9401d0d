#include <doctest.h>

#include <fstream>
#include <string>

#include "equimon/dot.hpp"
#include "equimon/errors.hpp"
#include "equimon/instance.hpp"
#include "helpers.hpp"

using namespace equimon;
namespace et = equimon::testing;

namespace {

std::string fixture(const std::string& name) {
  return std::string{EQUIMON_FIXTURE_DIR} + "/" + name;
}

}  // namespace

TEST_CASE("analyze the reference fixture") {
  Instance inst = load_instance(fixture("z2_reference.json"), 64);
  nlohmann::ordered_json report = analyze_report(inst, 64);
  CHECK(report["instance"]["group_order"] == 2);
  CHECK(report["instance"]["n_points"] == 6);
  CHECK(report["instance"]["orbit_count"] == 4);
  CHECK(report["counts"]["end"] == "144");
  CHECK(report["counts"]["aut"] == "16");
  CHECK(report["counts"]["fixing_collapsings"] == "10");
  CHECK(report["counts"]["collapsing_types"] == 3);
  CHECK(report["counts"]["u_total"] == 3);
  CHECK(report["counts"]["kappa_implied"] == 0);
  CHECK(report["boxes"].size() == 2);
}

TEST_CASE("analyze the trivial-group fixture") {
  Instance inst = load_instance(fixture("trivial3.json"), 64);
  nlohmann::ordered_json report = analyze_report(inst, 64);
  CHECK(report["counts"]["end"] == "27");
  CHECK(report["counts"]["aut"] == "6");
  CHECK(report["counts"]["fixing_collapsings"] == "6");
  CHECK(report["counts"]["collapsing_types"] == 1);
}

TEST_CASE("the coset encoding of the reference instance reports identically") {
  nlohmann::ordered_json a =
      analyze_report(load_instance(fixture("z2_reference.json"), 64), 64);
  nlohmann::ordered_json b =
      analyze_report(load_instance(fixture("z2_cosets.json"), 64), 64);
  CHECK(a["counts"] == b["counts"]);
  CHECK(a["boxes"] == b["boxes"]);
}

TEST_CASE("reports are byte-stable and round-trip through serialization") {
  Instance first = load_instance(fixture("regular_s3.json"), 64);
  std::string once = analyze_report(first, 64).dump(2);
  std::string twice = analyze_report(first, 64).dump(2);
  CHECK(once == twice);

  // Re-parse the serialized instance document and compare reports bytewise.
  std::ifstream in(fixture("regular_s3.json"));
  nlohmann::json doc = nlohmann::json::parse(in);
  nlohmann::json reserialized = nlohmann::json::parse(doc.dump());
  Instance second = parse_instance(reserialized, 64);
  CHECK(analyze_report(second, 64).dump(2) == once);
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_WITH_AS(load_instance(fixture("notaperm.json"), 64),
                       doctest::Contains("not a permutation"), Error);
  CHECK_THROWS_WITH_AS(load_instance(fixture("inconsistent.json"), 64),
                       doctest::Contains("inconsistent action"), Error);
  CHECK_THROWS_WITH_AS(load_instance(fixture("missing.json"), 64),
                       doctest::Contains("cannot open"), Error);

  auto parse = [](const std::string& text) {
    return parse_instance(nlohmann::json::parse(text), 64);
  };
  CHECK_THROWS_WITH_AS(parse(R"({"group": {"degree": 2, "generators": []}})"),
                       doctest::Contains("action"), Error);
  CHECK_THROWS_WITH_AS(
      parse(R"({"group": {"degree": 2, "generators": [[1,0]]},
                "action": {"generator_images": [[1,0]], "coset_spaces": []}})"),
      doctest::Contains("exactly one"), Error);
  CHECK_THROWS_WITH_AS(
      parse(R"({"group": {"degree": 2, "generators": [[1,0]]},
                "action": {"coset_spaces": [[[3]]]}})"),
      doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(
      parse(R"({"group": {"degree": 0, "generators": []},
                "action": {"coset_spaces": []}})"),
      doctest::Contains("degree"), Error);
}

TEST_CASE("group too large surfaces through parsing") {
  nlohmann::json doc = nlohmann::json::parse(
      R"({"group": {"degree": 3, "generators": [[1,0,2],[1,2,0]]},
          "action": {"coset_spaces": [[]]}})");
  CHECK_THROWS_WITH_AS(parse_instance(doc, 4),
                       doctest::Contains("group too large"), Error);
}

TEST_CASE("verification verdicts") {
  Instance inst = load_instance(fixture("z2_reference.json"), 64);
  VerifyOptions options;
  VerifyOutcome outcome = verify_report(inst, 64, options);
  CHECK(outcome.all_passed);
  REQUIRE(outcome.report.contains("verification"));
  CHECK(outcome.report["verification"].size() == 5);
  for (const auto& entry : outcome.report["verification"])
    CHECK(entry["verdict"] == "pass");

  // Harness self-test: corrupted expected values must be flagged.
  BoxDecomposition box(inst.gset, 64);
  CardinalityReport corrupted = cardinality_report(box);
  corrupted.end_count += BigNat{1};
  VerifyOutcome bad = run_verification(box, corrupted, options);
  CHECK_FALSE(bad.all_passed);
  bool saw_fail = false;
  for (const auto& entry : bad.report)
    if (entry["check"] == "endomorphism_count") saw_fail = entry["verdict"] == "fail";
  CHECK(saw_fail);
}

TEST_CASE("verification skips beyond the cap") {
  Instance inst = load_instance(fixture("z2_reference.json"), 64);
  VerifyOptions options;
  options.cap = 10;  // below |End| = 144
  VerifyOutcome outcome = verify_report(inst, 64, options);
  CHECK(outcome.all_passed);  // skips are not failures
  bool closure_skipped = false;
  for (const auto& entry : outcome.report["verification"])
    if (entry["check"] == "generation_closure")
      closure_skipped = entry["verdict"] == "skipped";
  CHECK(closure_skipped);

  options.cap = 1000000;
  options.skip_closure = true;
  VerifyOutcome skipped = verify_report(inst, 64, options);
  CHECK(skipped.all_passed);
}

TEST_CASE("poset DOT output") {
  {
    BoxDecomposition box(load_instance(fixture("z2_reference.json"), 64).gset, 64);
    std::string dot = poset_dot(box);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("|H|=1, alpha=2, [N:H]=2") != std::string::npos);
    CHECK(dot.find("|H|=2, alpha=2, [N:H]=1") != std::string::npos);
    CHECK(dot.find("c0 -> c1;") != std::string::npos);
  }
  {
    BoxDecomposition box(load_instance(fixture("regular_s3.json"), 64).gset, 64);
    std::string dot = poset_dot(box);
    CHECK(dot.find("->") == std::string::npos);  // single node, no edges
    CHECK(dot.find("alpha=1") != std::string::npos);
  }
  {
    BoxDecomposition box(load_instance(fixture("trivial3.json"), 64).gset, 64);
    std::string dot = poset_dot(box);
    CHECK(dot.find("->") == std::string::npos);
    CHECK(dot.find("alpha=3") != std::string::npos);
  }
}
