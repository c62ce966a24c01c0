#pragma once

// The claim registry: every statement the library certifies, re-runnable at
// configurable bounds with a fixed seed.  Each claim maps to one library
// operation and re-derives its verdict from scratch; results carry enough
// data (bounds, seed, witness) to replay a single failing check by hand.

#include <cstdint>
#include <string>
#include <vector>

namespace rys {

// Pass           the checked statement held everywhere in scope
// Counterexample the sweep produced a violating instance
// WitnessFound   an existence statement was satisfied by a concrete witness
// Reported       the run records an outcome without a pass/fail reading
enum class ClaimStatus { Pass, Counterexample, WitnessFound, Reported };

std::string to_string(ClaimStatus status);

struct VerifyOptions {
  std::size_t max_size = 4;       // universe bound for space-level sweeps
  std::size_t algebra_bound = 12; // carrier bound for algebra-level sweeps
  std::size_t samples = 1000;     // sample budget where exhaustion is infeasible
  std::uint64_t seed = 42;
};

struct ClaimResult {
  std::string id;
  std::string statement;                     // what was checked
  std::string scope;                         // the bound the run actually used
  ClaimStatus status = ClaimStatus::Pass;
  ClaimStatus expected = ClaimStatus::Pass;  // the registry's recorded outcome
  bool ok = true;                            // status == expected
  std::string detail;                        // witness / counterexample data
};

// Registered claim ids, in execution order.
std::vector<std::string> claim_ids();

// Runs one claim.  Unknown ids throw std::invalid_argument.
ClaimResult run_claim(const std::string& id, const VerifyOptions& options = {});

// Runs every registered claim in order.
std::vector<ClaimResult> run_all_claims(const VerifyOptions& options = {});

}  // namespace rys
