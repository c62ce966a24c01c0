// Acceptance gate: eleven end-to-end criteria, each printed as a single
// pass/fail line (run all, or one via --criterion N).  Runtime budgets are
// pinned next to the criteria that carry one.  Two criteria are expected to
// fail and stay red on purpose: the case-label coverage sweep and the
// product half of the construction-preservation criterion both have genuine
// counterexamples, which the claim registry documents; a criterion here
// asserts the original statement, not the documented outcome.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rys/json_io.hpp"
#include "rys/verify.hpp"

using namespace rys;
namespace fs = std::filesystem;

namespace {

struct Result {
  bool pass = false;
  std::string note;      // one short clause appended to the verdict line
  std::string analysis;  // multi-line detail, printed indented on failure
};

Correspondence fixture_map(const std::string& name) {
  return load_map(resolve_reference(name, fs::current_path()));
}

// Convenience: run a registry claim and require the given status.
Result claim_is(const std::string& id, ClaimStatus want, const VerifyOptions& opt = {}) {
  ClaimResult r = run_claim(id, opt);
  Result res;
  res.pass = r.status == want;
  res.note = r.id + " -> " + to_string(r.status);
  res.analysis = r.scope + "\n" + r.detail;
  return res;
}

Result merge(std::initializer_list<Result> parts) {
  Result out;
  out.pass = true;
  for (const Result& p : parts) {
    out.pass = out.pass && p.pass;
    if (!out.note.empty()) out.note += "; ";
    out.note += p.note;
    if (!p.analysis.empty()) out.analysis += p.analysis + "\n";
  }
  return out;
}

// --------------------------------------------------------------------------
// 1. The three worked four-to-five maps land in exactly the documented
//    classes, with the documented witnesses.

Result criterion1() {
  Correspondence phi = fixture_map("map_snc_not_oplus.json");
  ClassificationCertificate cp = classify(phi);
  Subset nx1 = Subset::of_names(phi.source->universe, {"x1", "x2"});
  Subset nx2 = Subset::of_names(phi.source->universe, {"x1", "x2", "x3"});
  Subset nx3 = Subset::of_names(phi.source->universe, {"x2", "x3"});
  const bool phi_ok = cp.is_snc && !cp.is_oplus_morphism &&
                      nx1.set_union(nx3) == nx2 &&
                      phi.image(nx2) != phi.image(nx1).set_union(phi.image(nx3));

  Correspondence sigma = fixture_map("map_oplus_not_snc.json");
  ClassificationCertificate cs = classify(sigma);
  std::vector<Subset> target_granules;
  for (const auto& g : sigma.target->granulation.granules())
    target_granules.push_back(g.members);
  GeneratedSubalgebra closure =
      generated_subalgebra(*sigma.target, target_granules, signature_ops(*sigma.target));
  Subset image_nx1 = sigma.image(nx1);
  const bool sigma_ok = cs.injective && cs.is_oplus_morphism && !cs.is_snc &&
                        image_nx1 == Subset::of_names(sigma.target->universe, {"a1", "a2"}) &&
                        !closure.contains(image_nx1);

  Correspondence tau = fixture_map("map_pon_noninjective.json");
  ClassificationCertificate ct = classify(tau);
  const bool tau_ok = ct.is_pon && !ct.injective_on_granules;

  Result r;
  r.pass = phi_ok && sigma_ok && tau_ok;
  std::ostringstream os;
  os << "phi snc/not-join " << phi_ok << ", sigma join/not-snc " << sigma_ok
     << ", tau proto/collapsing " << tau_ok;
  r.note = os.str();
  return r;
}

// 2. The collapsing join morphism maps the definite {x1,x2,x3} to {a1,a3},
//    which no union/intersection/complement term over target granules hits.

Result criterion2() {
  Correspondence collapse = fixture_map("map_morphism_collapse.json");
  ClassificationCertificate cert = classify(collapse);
  RepresentabilityReport rep = definite_representability(collapse);
  Subset definite = Subset::of_names(collapse.source->universe, {"x1", "x2", "x3"});
  Subset expect = Subset::of_names(collapse.target->universe, {"a1", "a3"});
  Result r;
  for (const auto& e : rep.entries) {
    if (e.definite != definite) continue;
    r.pass = cert.is_oplus_morphism && e.image == expect && !e.with_complement && !rep.ok;
    std::ostringstream os;
    os << "image of {x1,x2,x3} is " << e.image.to_string() << ", representable with complement "
       << e.with_complement;
    r.note = os.str();
    return r;
  }
  r.note = "definite element {x1,x2,x3} not reported";
  return r;
}

// 3. Every nontrivial injective sub-natural map between partition systems
//    with universes of size <= 3 carries one of the four case labels.
//    Expected red: the exhaustive sweep finds unlabeled cases.

Result criterion3() {
  return claim_is("snc-label-coverage", ClaimStatus::Pass);
}

// 4. Quotient sizes match the per-class product formula and every quotient
//    passes the whole axiom suite, for all equivalence spaces |S| <= 5.

Result criterion4() {
  return merge({claim_is("quotient-size-formula", ClaimStatus::Pass),
                claim_is("prerough-axiom-suite", ClaimStatus::Pass)});
}

// 5. Filter theory: the three-element chain has only trivial L-filters, the
//    six-element quotient carries the frozen nontrivial lattice L-filter
//    with its supremal companion, and cofineness is equivalent to the
//    companion collapsing, over every quotient from |S| <= 5.

Result criterion5() {
  return merge({claim_is("three-chain-trivial-filters", ClaimStatus::Pass),
                claim_is("six-element-nontrivial-filter", ClaimStatus::Pass),
                claim_is("cofine-iff-supremal-trivial", ClaimStatus::Pass)});
}

// 6. Paste and product preserve "no nontrivial lattice L-filter" on every
//    tested input (two levels, carriers <= 15), and the pasted chain's
//    axiom status is reported without crashing downstream checks.
//    Expected red: every tested product acquires such a filter.

Result criterion6() {
  return merge({claim_is("paste-preserves-filter-triviality", ClaimStatus::Pass),
                claim_is("product-filter-triviality", ClaimStatus::Pass),
                claim_is("paste-distributivity-report", ClaimStatus::Reported)});
}

// 7. For every quotient with carrier <= 12 and every L-filter, the big-join
//    comparison is a partial order compatible with both operators, and at
//    least one system fails absorption.

Result criterion7() {
  return merge({claim_is("ocpr-partial-order", ClaimStatus::Pass),
                claim_is("ocpr-absorption-witness", ClaimStatus::WitnessFound)});
}

// 8. Sandwich reflexivity wherever the witness domain is nonempty (|U| <= 4),
//    an asymmetry witness within the same bound, and the pointwise order on
//    sampled morphism classes a quasi-order with partial-order quotient.

Result criterion8() {
  return merge({claim_is("theta-lu-reflexive", ClaimStatus::Pass),
                claim_is("theta-asymmetry-witness", ClaimStatus::WitnessFound),
                claim_is("mu-class-quasi-order", ClaimStatus::Pass)});
}

// 9. Every sampled hypothesis pair (smooth join morphism, sandwiched
//    sub-natural map) agrees on the definite elements above the witness.

Result criterion9() {
  return claim_is("filter-agreement-on-definites", ClaimStatus::Pass);
}

// 10. Up-closed predicates keep upper approximations big (exhaustive over
//     carriers <= 32), anchored predicates are reproducible, and rough
//     growth is reflexive.

Result criterion10() {
  return merge({claim_is("b1-implies-b2", ClaimStatus::Pass),
                claim_is("delta-reproducibility", ClaimStatus::Pass),
                claim_is("gamma-reflexive", ClaimStatus::Pass)});
}

// 11. Exact rational inclusion-degree bounds exist for every enumerated
//     morphism over |U| <= 3, with the identity pinned at one.

Result criterion11() {
  return claim_is("alpha-beta-bounds-exist", ClaimStatus::Pass);
}

struct Criterion {
  int number;
  const char* title;
  long budget_ms;  // 0 = no pinned budget
  std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "worked maps classify exactly (sub-natural / join-morphism / proto-natural)",
       1000, criterion1},
      {2, "collapse morphism leaves the target term closure on a definite element", 1000,
       criterion2},
      {3, "every nontrivial sub-natural map between small partition systems is labeled",
       300000, criterion3},
      {4, "quotient size formula and axiom suite over all small equivalence spaces",
       60000, criterion4},
      {5, "filter theory: trivial chain, six-element witness, cofine equivalence", 120000,
       criterion5},
      {6, "paste and product preserve filter triviality; paste axioms reported", 0,
       criterion6},
      {7, "big-join comparison is a compatible partial order; absorption fails somewhere",
       120000, criterion7},
      {8, "sandwich reflexivity and asymmetry; class order quasi-order with po quotient",
       0, criterion8},
      {9, "sandwiched smooth/sub-natural pairs agree on definites above the witness", 0,
       criterion9},
      {10, "up-closure keeps upper approximations big; anchors reproducible; growth "
           "reflexive",
       0, criterion10},
      {11, "exact rational inclusion-degree bounds for every enumerated morphism", 0,
       criterion11},
  };
  return cs;
}

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r = c.run();
  const long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count());
  bool in_budget = c.budget_ms == 0 || ms <= c.budget_ms;
  const bool pass = r.pass && in_budget;
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
            << " (" << ms << " ms";
  if (c.budget_ms > 0) std::cout << " / " << c.budget_ms;
  std::cout << ") — " << r.note << "\n";
  if (!pass && !r.analysis.empty()) {
    std::istringstream lines(r.analysis);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) std::cout << "       " << line << "\n";
  }
  if (!in_budget) std::cout << "       exceeded the pinned runtime budget\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  bool matched = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    matched = true;
    all_pass = run_one(c) && all_pass;
  }
  if (!matched) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
