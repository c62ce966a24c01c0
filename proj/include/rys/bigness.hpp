#pragma once

// Bigness/relevance predicates over a RYS carrier, the delta constructions
// anchored at a reference element, the B/BC axiom checks with concrete
// counterexamples, pairwise implication scans over predicate families, and
// the rough-growth relation between correspondences.

#include <optional>
#include <string>
#include <vector>

#include "rys/correspondence.hpp"

namespace rys {

enum class DeltaVariant { D1, D2, D3, D4, D5 };

std::string to_string(DeltaVariant variant);
DeltaVariant delta_variant_from_string(const std::string& s);  // "delta1".."delta5"

enum class BignessOrigin { Extensional, Delta, UpSet };

struct BignessPredicate {
  RysPtr rys;
  std::vector<bool> holds;  // by carrier index
  BignessOrigin origin = BignessOrigin::Extensional;
  std::optional<Subset> x0;
  std::optional<DeltaVariant> variant;

  bool contains(std::size_t carrier_index) const { return holds.at(carrier_index); }
  std::vector<Subset> members() const;
};

BignessPredicate extensional_predicate(RysPtr rys, const std::vector<Subset>& members);

// Evaluates the chosen delta formula over the carrier.  D1: x is big iff
// every y above x0 sits below x^l.  D2: x0 below x and x0^l below x^l.
// D3/D4/D5: x0 below x^l, with x0 required lower-/both-/upper-definite.
BignessPredicate delta_predicate(RysPtr rys, const Subset& x0, DeltaVariant variant);

// The principal up-set of x0 under the system's parthood.
BignessPredicate upset_predicate(RysPtr rys, const Subset& x0);

enum class BignessAxiom { B1, B2, B3, BC1, BC2, BC3, BC4, BC5, BC6 };

std::string to_string(BignessAxiom axiom);
BignessAxiom bigness_axiom_from_string(const std::string& s);

struct BignessAxiomReport {
  BignessAxiom axiom = BignessAxiom::B1;
  bool holds = true;
  std::vector<Subset> counterexample;  // instantiation of the quantified tuple
  std::string detail;
};

// Exhaustive quantifier evaluation over the finite carrier; the first
// violating tuple (carrier order, outer to inner) is reported.
BignessAxiomReport check_bigness_axiom(const BignessPredicate& big, BignessAxiom axiom);

// For each ordered axiom pair (i, j): a predicate in the family satisfying
// axiom i but not axiom j, if any.
struct ImplicationMatrix {
  std::vector<BignessAxiom> axioms;
  // counterexample[i][j]: index into the family, or empty when i => j holds
  // across the whole family.
  std::vector<std::vector<std::optional<std::size_t>>> counterexample;
};

ImplicationMatrix implication_matrix(const std::vector<BignessPredicate>& family,
                                     const std::vector<BignessAxiom>& axioms);

// All up-closed carrier subsets of the system, as extensional predicates.
std::vector<BignessPredicate> enumerate_up_closed_predicates(RysPtr rys,
                                                             std::size_t limit = 0);

// Gamma: g grows within f's approximations over the big elements — for all
// y and all big x below y^l, f(y)^l is below g(y) and g(y) below f(y)^u.
struct GrowthVerdict {
  bool holds = true;
  std::optional<std::pair<Subset, Subset>> witness;  // violating (x, y)
  std::string detail;
};

GrowthVerdict rough_growth(const Correspondence& f, const Correspondence& g,
                           const BignessPredicate& big);

}  // namespace rys
