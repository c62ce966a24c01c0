// Bigness predicate tests: delta constructions on the 4-element classical
// system, B/BC axiom checks with frozen counterexamples, the implication
// scan over all up-closed predicates of a small carrier, and rough growth.

#include <string>
#include <vector>

#include "doctest.h"
#include "rys/bigness.hpp"
#include "rys/posets.hpp"

using namespace rys;

namespace {

RysPtr classical_four() {
  auto u = Universe::make({"x1", "x2", "x3", "x4"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 1}, {1, 2}})};
  return build_classical_rys(sp);
}

RysPtr classical_five() {
  auto u = Universe::make({"a1", "a2", "a3", "a4", "a5"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 3}, {3, 1}})};
  return build_classical_rys(sp);
}

}  // namespace

TEST_CASE("up-set enumeration") {
  // Boolean lattices: the up-set counts are the Dedekind numbers.
  auto boolean_leq = [](std::size_t bits) {
    return [bits](std::size_t a, std::size_t b) { return (a & ~b) == 0 && a < (1u << bits) && b < (1u << bits); };
  };
  CHECK(enumerate_up_sets(4, boolean_leq(2)).size() == 6);
  CHECK(enumerate_up_sets(8, boolean_leq(3)).size() == 20);

  // A 3-chain has one up-set per cut.
  auto chain = [](std::size_t a, std::size_t b) { return a <= b; };
  auto chains = enumerate_up_sets(3, chain);
  CHECK(chains.size() == 4);
  for (const auto& s : chains) CHECK(is_up_set(s, chain));

  CHECK(enumerate_up_sets(8, boolean_leq(3), 5).size() == 5);
  auto antichain = [](std::size_t, std::size_t) { return false; };
  CHECK(enumerate_up_sets(2, antichain).size() == 4);
  // Mutually comparable elements collapse to one choice.
  auto mutual = [](std::size_t, std::size_t) { return true; };
  CHECK(enumerate_up_sets(2, mutual).size() == 2);
  auto strict_cycle = [](std::size_t a, std::size_t b) { return b == (a + 1) % 3; };
  CHECK_THROWS_AS(enumerate_up_sets(3, strict_cycle), std::invalid_argument);
}

TEST_CASE("delta predicates") {
  auto sys = classical_four();
  auto u = sys->universe;

  // Anchored at the bottom, everything is big.
  BignessPredicate all = delta_predicate(sys, Subset::empty_set(u), DeltaVariant::D2);
  CHECK(all.members().size() == 16);

  // Anchored at the class {x4}, exactly its supersets are big: the lower
  // approximation contains {x4} iff the set does.
  BignessPredicate d4 = delta_predicate(sys, Subset::of_names(u, {"x4"}), DeltaVariant::D4);
  std::vector<Subset> members = d4.members();
  CHECK(members.size() == 8);
  for (const auto& m : members) CHECK(m.contains(3));

  // The first variant with the top anchor keeps only the top.
  BignessPredicate d1 = delta_predicate(sys, Subset::full_set(u), DeltaVariant::D1);
  REQUIRE(d1.members().size() == 1);
  CHECK(d1.members()[0].is_full());

  // Side conditions: {x1} is not definite in any sense.
  CHECK_THROWS_AS(delta_predicate(sys, Subset::of_names(u, {"x1"}), DeltaVariant::D3),
                  std::invalid_argument);
  CHECK_THROWS_AS(delta_predicate(sys, Subset::of_names(u, {"x1"}), DeltaVariant::D4),
                  std::invalid_argument);

  // For a partition the three definite flavors agree.
  BignessPredicate d5 = delta_predicate(sys, Subset::of_names(u, {"x4"}), DeltaVariant::D5);
  CHECK(d5.holds == d4.holds);

  // Reproducibility.
  BignessPredicate again = delta_predicate(sys, Subset::of_names(u, {"x4"}), DeltaVariant::D4);
  CHECK(again.holds == d4.holds);
  CHECK(to_string(DeltaVariant::D4) == "delta4");
  CHECK(delta_variant_from_string("delta2") == DeltaVariant::D2);
  CHECK_THROWS_AS(delta_variant_from_string("delta6"), std::invalid_argument);
}

TEST_CASE("axiom checks with counterexamples") {
  auto sys = classical_four();
  auto u = sys->universe;
  BignessPredicate up4 = upset_predicate(sys, Subset::of_names(u, {"x4"}));

  for (auto ax : {BignessAxiom::B1, BignessAxiom::B2, BignessAxiom::B3, BignessAxiom::BC1,
                  BignessAxiom::BC3, BignessAxiom::BC4, BignessAxiom::BC5, BignessAxiom::BC6})
    CHECK(check_bigness_axiom(up4, ax).holds);

  // BC2 fails on a principal up-set: {x4} | {} is big while {} is not.
  BignessAxiomReport bc2 = check_bigness_axiom(up4, BignessAxiom::BC2);
  CHECK(!bc2.holds);
  REQUIRE(bc2.counterexample.size() == 2);
  CHECK(bc2.counterexample[0] == Subset::of_names(u, {"x4"}));
  CHECK(bc2.counterexample[1].empty());

  // A lone member is not up-closed; the first violation in carrier order
  // is {x4} below {x1,x4}.
  BignessPredicate lone = extensional_predicate(sys, {Subset::of_names(u, {"x4"})});
  BignessAxiomReport b1 = check_bigness_axiom(lone, BignessAxiom::B1);
  CHECK(!b1.holds);
  REQUIRE(b1.counterexample.size() == 2);
  CHECK(b1.counterexample[0] == Subset::of_names(u, {"x4"}));
  CHECK(b1.counterexample[1] == Subset::of_names(u, {"x1", "x4"}));

  // {x1} escapes upward through its upper approximation.
  BignessPredicate x1only = extensional_predicate(sys, {Subset::of_names(u, {"x1"})});
  BignessAxiomReport b2 = check_bigness_axiom(x1only, BignessAxiom::B2);
  CHECK(!b2.holds);
  REQUIRE(b2.counterexample.size() == 1);
  CHECK(b2.counterexample[0] == Subset::of_names(u, {"x1"}));

  CHECK(bigness_axiom_from_string("BC6") == BignessAxiom::BC6);
  CHECK_THROWS_AS(bigness_axiom_from_string("B7"), std::invalid_argument);
}

TEST_CASE("implication scan over up-closed predicates") {
  auto u3 = Universe::make({"p", "q", "r"});
  ApproximationSpace sp{u3, generate_relation(u3, RelationKind::Equivalence, {{0, 1}})};
  auto sys = build_classical_rys(sp);

  std::vector<BignessPredicate> family = enumerate_up_closed_predicates(sys);
  CHECK(family.size() == 20);  // up-sets of the 3-bit boolean lattice
  // One predicate that is B2-closed but not up-closed.
  family.push_back(extensional_predicate(sys, {Subset::empty_set(u3)}));

  std::vector<BignessAxiom> axioms = {BignessAxiom::B1, BignessAxiom::B2, BignessAxiom::B3,
                                      BignessAxiom::BC1, BignessAxiom::BC4};
  ImplicationMatrix m = implication_matrix(family, axioms);

  auto cell = [&](BignessAxiom i, BignessAxiom j) {
    std::size_t ii = 0, jj = 0;
    for (std::size_t k = 0; k < axioms.size(); ++k) {
      if (axioms[k] == i) ii = k;
      if (axioms[k] == j) jj = k;
    }
    return m.counterexample[ii][jj];
  };

  CHECK(!cell(BignessAxiom::B1, BignessAxiom::B2).has_value());
  CHECK(!cell(BignessAxiom::B1, BignessAxiom::B3).has_value());
  CHECK(!cell(BignessAxiom::B3, BignessAxiom::B1).has_value());
  CHECK(!cell(BignessAxiom::B1, BignessAxiom::BC1).has_value());
  // A union of two principal up-sets meets outside itself.
  REQUIRE(cell(BignessAxiom::B1, BignessAxiom::BC4).has_value());
  // The {empty-set-only} predicate separates B2 from B1.
  REQUIRE(cell(BignessAxiom::B2, BignessAxiom::B1).has_value());
  CHECK(*cell(BignessAxiom::B2, BignessAxiom::B1) == 20);

  // Without reflexivity, B3 no longer forces B1: over the two-point carrier
  // with the single strict parthood edge, the bottom-only predicate passes
  // B3 vacuously and fails B1 outright.
  auto u1 = Universe::make({"e"});
  ApproximationSpace sp1{u1, generate_relation(u1, RelationKind::Equivalence, {})};
  auto strict = std::make_shared<Rys>(*build_classical_rys(sp1));
  strict->parthood = [](const Subset& a, const Subset& b) { return a.empty() && !b.empty(); };
  BignessPredicate bottom_only = extensional_predicate(strict, {Subset::empty_set(u1)});
  CHECK(check_bigness_axiom(bottom_only, BignessAxiom::B3).holds);
  CHECK(!check_bigness_axiom(bottom_only, BignessAxiom::B1).holds);
}

TEST_CASE("rough growth") {
  auto sys = classical_five();
  auto u = sys->universe;
  Correspondence id = make_correspondence(sys, sys, {}, ExtensionPolicy::IdentityElsewhere,
                                          "id");
  std::vector<std::pair<Subset, Subset>> upper_rows, bottom_rows;
  for (const auto& x : sys->carrier) {
    upper_rows.emplace_back(x, upper_approx(sys->granulation, x));
    bottom_rows.emplace_back(x, Subset::empty_set(u));
  }
  Correspondence up = make_correspondence(sys, sys, upper_rows, ExtensionPolicy::ExplicitTotal,
                                          "upper");
  Correspondence bottom = make_correspondence(sys, sys, bottom_rows,
                                              ExtensionPolicy::ExplicitTotal, "bottom");

  BignessPredicate everything = upset_predicate(sys, Subset::empty_set(u));
  CHECK(rough_growth(id, id, everything).holds);
  CHECK(rough_growth(up, up, everything).holds);

  // Vacuous truth for the empty predicate.
  BignessPredicate nothing = extensional_predicate(sys, {});
  CHECK(rough_growth(id, bottom, nothing).holds);

  // Only the top is big: the antecedent only fires at y = top.
  BignessPredicate top_only = upset_predicate(sys, Subset::full_set(u));
  CHECK(rough_growth(id, up, top_only).holds);

  // With everything big, the constant bottom map escapes the sandwich at
  // the first set with a nonempty lower approximation.
  GrowthVerdict bad = rough_growth(id, bottom, everything);
  CHECK(!bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first.empty());
  CHECK(bad.witness->second == Subset::of_names(u, {"a3"}));

  // Structural errors.
  auto other = classical_four();
  Correspondence other_id = make_correspondence(other, other, {},
                                                ExtensionPolicy::IdentityElsewhere, "id");
  CHECK_THROWS_AS(rough_growth(id, other_id, everything), std::invalid_argument);
  BignessPredicate wrong_home = upset_predicate(other, Subset::empty_set(other->universe));
  CHECK_THROWS_AS(rough_growth(id, id, wrong_home), std::invalid_argument);
}
