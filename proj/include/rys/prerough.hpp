#pragma once

// The quotient of a powerset by rough equality, as a finite algebra: order,
// lattice operations computed as exact bounds, the L/U/negation tables, and
// an exhaustive axiom checker.  On top of that sit the filter notions
// (o-filters, L-filters, prime and lattice variants, cofine and supremal
// filters), induced partial systems on a filter, paste/product constructions
// and the operationally gated Cup/Cap systems.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rys/space.hpp"

namespace rys {

// A point of the quotient: the pair of approximations plus one concrete
// witness set realizing it.
struct RoughObject {
  Subset lower;
  Subset upper;
  Subset representative;
};

struct PreRoughAlgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  // Least upper / greatest lower bounds.  An empty optional marks a pair
  // whose bound is not unique; constructions flag these rather than patch
  // them silently.
  std::vector<std::vector<std::optional<std::size_t>>> join, meet;
  std::vector<std::size_t> L, U, neg;
  std::size_t zero = 0, one = 0;
  // Present only for algebras built from a quotient; parallel to labels.
  std::vector<RoughObject> objects;

  std::size_t size() const { return labels.size(); }
  bool tables_total() const;
};

// Distinct (lower, upper) pairs over the powerset of an equivalence space,
// ordered componentwise, with L(l,u) = (l,l), U(l,u) = (u,u) and
// neg(l,u) = (complement u, complement l).  Representatives are the first
// realizing subsets in mask order, and every stored object is re-checked
// against its representative.  Throws if some pair of elements lacks a
// unique bound (which would falsify the lattice-order reading).
PreRoughAlgebra quotient_by_rough_equality(const ApproximationSpace& space);

struct PreRoughAxiomReport {
  struct Entry {
    std::string name;
    bool holds = true;
    std::string detail;  // first violating instance, by labels
  };
  std::vector<Entry> axioms;
  bool all_pass = true;
  // Distributivity is tracked apart from the core suite: pasted algebras
  // lose it while keeping most of the rest.
  Entry distributivity;
};

// Exhaustive check of the bounded-lattice-order reading of leq, the L/U/neg
// equations and the order-determination law, over all pairs and triples.
// Axiom instances that hit an undefined bound are reported as failures of
// the lattice-order entry rather than skipped.
PreRoughAxiomReport check_prerough_axioms(const PreRoughAlgebra& q);

struct FilterRecord {
  std::vector<std::size_t> elements;  // ascending carrier indices
  bool o_filter = false;              // up-closed
  bool l_filter = false;              // and L-stable
  bool prime = false;                 // and 1 != a|b in K forces a or b in K
  bool lattice = false;               // L-filter closed under join and meet
  bool cofine = false;                // K minus top cofinal in carrier minus top
  bool nontrivial = false;            // neither {1} nor the whole carrier
  // Set when this filter equals K+ of another enumerated filter (by index).
  std::optional<std::size_t> supremal_of;
};

// All nonempty up-sets of the carrier, flagged.  The empty set is skipped:
// it satisfies the defining conditions vacuously and would make every
// nontriviality statement false for free.  Throws when the carrier exceeds
// `max_size`.
std::vector<FilterRecord> enumerate_filters(const PreRoughAlgebra& q,
                                            std::size_t max_size = 16);

// Dual enumeration: nonempty down-sets with the dual flags (o_filter means
// down-closed, l_filter means U-stable, prime uses 0 != a&b in K).
std::vector<FilterRecord> enumerate_ideals(const PreRoughAlgebra& q,
                                           std::size_t max_size = 16);

// The partial system induced on an L-filter K: join stays total, meet and
// negation restrict to K where their value lands inside.  Weak equalities
// hold when both sides are defined and equal.
struct InducedSystem {
  std::vector<std::size_t> elements;
  bool join_total = false;
  bool distributive_lattice = false;  // meaningful for lattice L-filters
  bool closed_under_L = false;
  bool closed_under_U = false;
  std::optional<std::size_t> neg_escape;  // member whose negation leaves K
  bool weak_L_meet = false;               // L(a&b) =w La & Lb
  bool weak_absorption = false;           // x | (y & x) =w x
  bool weak_distributivity = false;       // both weak distributive laws
};

InducedSystem induced_structure(const PreRoughAlgebra& q, const FilterRecord& k);

// K+ = { y : for all x in K, x | y = 1 } for a lattice L-filter K, with the
// checks the supremal story needs: K+ is itself a lattice L-filter, and K is
// cofine exactly when K+ collapses to {1}.
struct SupremalResult {
  std::vector<std::size_t> kplus;
  bool kplus_is_lattice_l_filter = false;
  bool k_cofine = false;
  bool cofine_iff_kplus_trivial = false;
};

SupremalResult supremal(const PreRoughAlgebra& q, const FilterRecord& k);

// Family-level view: every lattice L-filter with its K+, the distinct
// supremal filters, and whether their inclusion order (and its dual, the
// order induced by the K -> K+ map) forms a Boolean lattice.
struct SupremalFamilyReport {
  std::vector<FilterRecord> lattice_l_filters;
  std::vector<std::vector<std::size_t>> kplus;  // parallel to the above
  std::vector<std::vector<std::size_t>> supremal_filters;
  bool inclusion_order_boolean = false;
  bool dual_order_boolean = false;
  std::string note;
};

SupremalFamilyReport supremal_family(const PreRoughAlgebra& q);

// First pair (a, b) of non-top elements whose join is incomparable to every
// non-top member of K, scanning in carrier order; requires a nontrivial
// lattice L-filter.
std::optional<std::pair<std::size_t, std::size_t>> incomparability_search(
    const PreRoughAlgebra& q, const FilterRecord& k);

// Construction outputs carry their own re-verification: the axiom report
// and the nontrivial-lattice-L-filter scan.
struct PreRoughConstruction {
  PreRoughAlgebra algebra;
  PreRoughAxiomReport axioms;
  bool bounds_unique = true;
  bool has_nontrivial_lattice_l_filter = false;
  std::vector<std::size_t> nontrivial_witness;  // elements of one, if any
};

// Adjoins a complementary pair p, q of new middles (incomparable to all old
// middles and to each other, neg p = q, Lp = Lq = 0, Up = Uq = 1) and
// recomputes bounds.
PreRoughConstruction paste(const PreRoughAlgebra& q);

// Componentwise product.
PreRoughConstruction product(const PreRoughAlgebra& q1, const PreRoughAlgebra& q2);

// Cup/Cap gate join/meet on membership of the result in K; lhd is the
// derived reflexive comparison.  The verification flags cover: lhd being a
// partial order, its compatibility with L and U, its restriction to K
// agreeing with leq, and the first absorption failure x Cup (y Cap x) != x
// (undefined counts as failure), if any.
struct OcprSystem {
  PreRoughAlgebra base;
  std::vector<std::size_t> k;
  std::vector<std::vector<std::optional<std::size_t>>> cup, cap;
  std::vector<std::vector<bool>> lhd;
  bool partial_order = false;
  bool lu_compatible = false;
  bool k_restriction_matches = false;
  std::optional<std::pair<std::size_t, std::size_t>> absorption_failure;
};

OcprSystem ocpr_build(const PreRoughAlgebra& q, const FilterRecord& k);

// The inclusion of a cofine filter K back into Q, read as a forgetful
// morphism: order, L, U and the defined parts of join/meet carry over;
// negation is dropped (a witness member whose negation escapes K is
// recorded when one exists).
struct EmbeddingReport {
  bool preserves_order = false;
  bool preserves_l = false;
  bool preserves_u = false;
  bool preserves_join = false;
  bool preserves_meet_where_defined = false;
  bool neg_closed = false;
  std::optional<std::size_t> neg_drop_witness;
  bool closed_morphism = false;
  bool identity_case = false;  // K is the whole carrier
};

EmbeddingReport cofine_embedding(const PreRoughAlgebra& q, const FilterRecord& k);

}  // namespace rys
