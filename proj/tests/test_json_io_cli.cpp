// The JSON front door and the command-line surface: loaders against the
// bundled data files, schema rejections, report canonicalization, exit
// codes, and spot checks of the verify claim registry.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rys/cli.hpp"
#include "rys/json_io.hpp"
#include "rys/verify.hpp"

using namespace rys;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() {
  const char* env = std::getenv("RYSW_DATA_DIR");
  REQUIRE(env != nullptr);
  return fs::path(env);
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("space files round-trip through their JSON form") {
  ApproximationSpace sp = load_space(data_dir() / "four_tolerance.json");
  CHECK(sp.universe->size() == 4);
  CHECK(sp.relation.kind() == RelationKind::Tolerance);

  ApproximationSpace back = space_from_json(space_json(sp));
  CHECK(back.universe->same_elements(*sp.universe));
  CHECK(back.relation.pairs() == sp.relation.pairs());
}

TEST_CASE("the bundled maps classify as documented") {
  Correspondence phi = load_map(data_dir() / "map_snc_not_oplus.json");
  ClassificationCertificate cp = classify(phi);
  CHECK(cp.is_snc);
  CHECK_FALSE(cp.is_oplus_morphism);

  Correspondence sigma = load_map(data_dir() / "map_oplus_not_snc.json");
  ClassificationCertificate cs = classify(sigma);
  CHECK(cs.injective);
  CHECK(cs.is_oplus_morphism);
  CHECK_FALSE(cs.is_snc);

  Correspondence tau = load_map(data_dir() / "map_pon_noninjective.json");
  ClassificationCertificate ct = classify(tau);
  CHECK(ct.is_pon);
  CHECK_FALSE(ct.injective_on_granules);

  Correspondence collapse = load_map(data_dir() / "map_morphism_collapse.json");
  RepresentabilityReport rep = definite_representability(collapse);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("schema violations are rejected with invalid_argument") {
  CHECK_THROWS_AS(space_from_json(Json::object()), std::invalid_argument);
  CHECK_THROWS_AS(space_from_json(Json::parse(R"({"universe": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      space_from_json(Json::parse(
          R"({"universe": ["a", "a"], "relation": {"kind": "tolerance", "pairs": []}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      space_from_json(Json::parse(
          R"({"universe": ["a"], "relation": {"kind": "tolerance", "pairs": [["a", "b"]]}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(rys_from_json(Json::parse(R"({"space": {"universe": ["a"],
      "relation": {"kind": "equivalence", "pairs": []}}, "approx": "mystery"})"),
                                fs::path()),
                  std::invalid_argument);
  CHECK_THROWS_AS(rys_from_json(Json::parse(R"({"space": {"universe": ["a"],
      "relation": {"kind": "equivalence", "pairs": []}}, "approx": "classical",
      "axioms": ["NOPE"]})"),
                                fs::path()),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_json_file(write_temp("rysw-bad.json", "{ not json")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_json_file(fs::path("/nonexistent/nowhere.json")),
                  std::invalid_argument);
}

TEST_CASE("references resolve through the data directory") {
  fs::path found = resolve_reference("four_equivalence.json", fs::path("/nonexistent"));
  CHECK(found == data_dir() / "four_equivalence.json");
  CHECK_THROWS_AS(resolve_reference("no-such-file.json", fs::path("/nonexistent")),
                  std::invalid_argument);
}

TEST_CASE("reports are canonical") {
  Json payload = {{"b", 1}, {"a", 2}};
  std::string once = emit_report(payload);
  std::string twice = emit_report(payload);
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  CHECK(once.find("\"version\": \"0.1.0\"") != std::string::npos);
  // nlohmann objects iterate sorted, so "a" precedes "b" in the dump.
  CHECK(once.find("\"a\"") < once.find("\"b\""));
}

TEST_CASE("cli: space inspection and schema rejection exit codes") {
  CliRun ok = cli({"space", "-i", "four_tolerance.json"});
  CHECK(ok.code == 0);
  Json rep = Json::parse(ok.out);
  CHECK(rep.at("granulations").size() == 2);  // neighbourhoods and blocks

  CliRun empty = cli({"space", "-i", write_temp("rysw-empty.json", "{}").string()});
  CHECK(empty.code == 2);
  CHECK(empty.err.find("universe") != std::string::npos);

  CliRun missing = cli({"space", "-i", "no-such-file.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("cli: classify emits the certificate, with and without overrides") {
  CliRun direct = cli({"classify", "-m", "map_snc_not_oplus.json"});
  CHECK(direct.code == 0);
  Json cert = Json::parse(direct.out);
  CHECK(cert.at("is_snc") == true);
  CHECK(cert.at("is_oplus_morphism") == false);

  CliRun with_sides = cli({"classify", "-s1", "four_tolerance.json", "-s2",
                           "five_equivalence.json", "-m", "map_snc_not_oplus.json"});
  CHECK(with_sides.code == 0);
  CHECK(Json::parse(with_sides.out).at("is_snc") == true);

  CliRun half = cli({"classify", "-s1", "four_tolerance.json", "-m",
                     "map_snc_not_oplus.json"});
  CHECK(half.code == 2);
}

TEST_CASE("cli: compare rebuilds the second map on the first map's systems") {
  CliRun r = cli({"compare", "--kind", "theta-lu", "-f", "map_snc_not_oplus.json", "-g",
                  "map_snc_not_oplus.json"});
  CHECK(r.code == 0);
  Json v = Json::parse(r.out);
  CHECK(v.at("holds") == true);
  CHECK(v.at("kind") == "theta-lu");

  CliRun bad = cli({"compare", "--kind", "sideways", "-f", "map_snc_not_oplus.json", "-g",
                    "map_snc_not_oplus.json"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: evolution, bigness and prerough run end to end") {
  CliRun evo = cli({"evolution", "-x", "four_equivalence.json", "-y",
                    "four_equivalence.json"});
  CHECK(evo.code == 0);
  CHECK(Json::parse(evo.out).at("label") == "SSE");

  CliRun big = cli({"bigness", "-i", "four_equivalence.json", "--predicate",
                    "upset:x0=x4", "--axioms", "B1,BC2"});
  CHECK(big.code == 0);
  Json breps = Json::parse(big.out).at("axioms");
  CHECK(breps.size() == 2);
  CHECK(breps[0].at("holds") == true);   // B1
  CHECK(breps[1].at("holds") == false);  // BC2

  CliRun pre = cli({"prerough", "-i", "four_equivalence.json", "--filters"});
  CHECK(pre.code == 0);
  Json q = Json::parse(pre.out);
  CHECK(q.at("quotient").at("size") == 6);
  CHECK(q.at("filters").size() == 9);

  CliRun bad_pred = cli({"bigness", "-i", "four_equivalence.json", "--predicate",
                         "delta9:x0=x1"});
  CHECK(bad_pred.code == 2);
}

TEST_CASE("cli: unknown flags and help") {
  CliRun bad = cli({"--definitely-not-a-flag"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("verify: registry spot checks at unit-test scale") {
  CHECK_THROWS_AS(run_claim("no-such-claim"), std::invalid_argument);

  std::vector<std::string> ids = claim_ids();
  CHECK(ids.size() == 40);

  VerifyOptions small;
  small.max_size = 3;
  small.samples = 100;
  for (const char* id :
       {"morphism-census", "identity-closed-morphism", "three-chain-trivial-filters",
        "six-element-nontrivial-filter", "theta-asymmetry-witness",
        "snc-without-oplus-witness", "oplus-without-snc-witness",
        "pon-noninjective-witness", "collapse-nonrepresentable-witness",
        "bc2-independence-witness", "report-determinism", "quotient-size-formula",
        "ocpr-absorption-witness"}) {
    ClaimResult r = run_claim(id, small);
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.ok);
  }

  // The two recorded counterexample claims really do produce counterexamples.
  ClaimResult labels = run_claim("snc-label-coverage", small);
  CHECK(labels.status == ClaimStatus::Counterexample);
  CHECK(labels.ok);
  ClaimResult prod = run_claim("product-filter-triviality", small);
  CHECK(prod.status == ClaimStatus::Counterexample);
  CHECK(prod.ok);
}

TEST_CASE("cli: verify subcommand reports per-claim status") {
  CliRun r = cli({"verify", "--suite", "six-element-nontrivial-filter"});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep.at("all_ok") == true);
  CHECK(rep.at("claims").size() == 1);
  CHECK(rep.at("claims")[0].at("status") == "pass");

  CliRun text = cli({"verify", "--suite", "theta-asymmetry-witness", "--text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("[ ok ]") != std::string::npos);

  CliRun unknown = cli({"verify", "--suite", "no-such-claim"});
  CHECK(unknown.code == 2);
}
