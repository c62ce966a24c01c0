// Comparison-relation tests.  The base fixture is the classical system on
// {x1..x4} with classes {x1,x2,x3} and {x4}; its X_c (carrier minus coatoms
// and bounds) starts at {x1}, which makes first-found witnesses easy to
// freeze.  The identity, the upper map, the x1/x2 swap and the two constant
// maps exercise every membership combination used below.

#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "rys/comparison.hpp"

using namespace rys;

namespace {

RysPtr classical_four() {
  auto u = Universe::make({"x1", "x2", "x3", "x4"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 1}, {1, 2}})};
  return build_classical_rys(sp);
}

Correspondence table_map(RysPtr sys, const std::function<Subset(const Subset&)>& fn,
                         const std::string& name) {
  std::vector<std::pair<Subset, Subset>> rows;
  for (const auto& x : sys->carrier) rows.emplace_back(x, fn(x));
  return make_correspondence(sys, sys, rows, ExtensionPolicy::ExplicitTotal, name);
}

Correspondence identity_map(RysPtr sys, const std::string& name = "id") {
  return make_correspondence(sys, sys, {}, ExtensionPolicy::IdentityElsewhere, name);
}

Correspondence upper_map(RysPtr sys) {
  return table_map(sys, [&](const Subset& s) { return upper_approx(sys->granulation, s); },
                   "upper");
}

// The permutation x1 <-> x2 lifted to subsets; it preserves both classes.
Correspondence swap_map(RysPtr sys) {
  return table_map(sys,
                   [&](const Subset& s) {
                     Subset out = s;
                     const bool a = s.contains(0);
                     const bool b = s.contains(1);
                     Subset x1 = Subset::singleton(sys->universe, 0);
                     Subset x2 = Subset::singleton(sys->universe, 1);
                     out = out.set_difference(x1).set_difference(x2);
                     if (a) out = out.set_union(x2);
                     if (b) out = out.set_union(x1);
                     return out;
                   },
                   "swap");
}

Correspondence constant_map(RysPtr sys, const Subset& value, const std::string& name) {
  return table_map(sys, [&](const Subset&) { return value; }, name);
}

}  // namespace

TEST_CASE("theta, omega and o verdicts") {
  auto sys = classical_four();
  Correspondence id = identity_map(sys);
  Correspondence up = upper_map(sys);

  // Reflexivity: the first admissible base is the first non-coatom
  // non-bound carrier element, {x1}.
  ComparisonVerdict self = related(id, id, ComparisonKind::ThetaLu);
  REQUIRE(self.holds);
  CHECK(self.witness->z0 == Subset::singleton(sys->universe, 0));
  CHECK(self.witness->i == 0);
  CHECK(check_witness(id, id, ComparisonKind::ThetaLu, *self.witness));

  // The upper map is sandwiched by the identity everywhere.
  ComparisonVerdict up_in = related(up, id, ComparisonKind::ThetaLu);
  REQUIRE(up_in.holds);
  CHECK(up_in.witness->z0 == Subset::singleton(sys->universe, 0));

  // ...but not conversely: every up-set in X_c reaches a coatom, which is
  // not definite, so id(z) falls below (up(z))^l eventually fails.
  CHECK(!related(id, up, ComparisonKind::ThetaLu).holds);
  CHECK(!symmetric_theta(up, id));
  CHECK(symmetric_theta(id, id));

  // Theta-uu pins f between two uppers; the upper map itself qualifies.
  ComparisonVerdict uu = related(up, id, ComparisonKind::ThetaUu);
  REQUIRE(uu.holds);
  CHECK(uu.witness->i == 0);
  CHECK(uu.witness->j == 0);

  // One-sided variants.
  CHECK(related(id, id, ComparisonKind::OmegaL).holds);
  CHECK(related(id, id, ComparisonKind::OU).holds);
  CHECK(related(up, id, ComparisonKind::OmegaU).holds);
  ComparisonVerdict ol = related(id, id, ComparisonKind::OL);
  CHECK(!ol.holds);
  CHECK(ol.reason == "no witness over X_c");

  // A two-element universe has no admissible base at all: every singleton
  // is both an atom and a coatom.
  auto tiny_u = Universe::make({"p", "q"});
  ApproximationSpace tiny_sp{tiny_u, generate_relation(tiny_u, RelationKind::Equivalence, {})};
  auto tiny = build_classical_rys(tiny_sp);
  ComparisonVerdict none = related(identity_map(tiny), identity_map(tiny),
                                   ComparisonKind::ThetaLu);
  CHECK(!none.holds);
  CHECK(none.reason == "no admissible z0");

  // Witnesses of every positive verdict re-check from scratch.
  for (auto kind : {ComparisonKind::ThetaUu, ComparisonKind::OmegaL, ComparisonKind::OmegaU,
                    ComparisonKind::OU}) {
    ComparisonVerdict v = related(up, id, kind);
    if (v.holds) CHECK(check_witness(up, id, kind, *v.witness));
  }

  CHECK(to_string(ComparisonKind::OmegaU) == "omega-u");
  CHECK(comparison_kind_from_string("o-l") == ComparisonKind::OL);
  CHECK_THROWS_AS(comparison_kind_from_string("theta"), std::invalid_argument);
}

TEST_CASE("mu classes and their checked operations") {
  auto sys = classical_four();
  Correspondence id = identity_map(sys);
  Correspondence up = upper_map(sys);
  Correspondence swap = swap_map(sys);
  Correspondence top = constant_map(sys, Subset::full_set(sys->universe), "top");
  Correspondence bottom = constant_map(sys, Subset::empty_set(sys->universe), "bottom");

  // The upper map is theta-related to the identity but is no meet
  // morphism; the constant bottom map is a morphism but never reaches the
  // lower bound of the sandwich.
  MuClass cls = mu_class(id, MuFlavor::Morphisms, {id, up, swap, top, bottom});
  REQUIRE(cls.members.size() == 3);
  CHECK(cls.members[0].name == "id");
  CHECK(cls.members[1].name == "swap");
  CHECK(cls.members[2].name == "top");

  CHECK_THROWS_AS(mu_class(up, MuFlavor::Morphisms, {id}), std::invalid_argument);

  // f + f = f.
  MuOpResult idem = mu_plus(cls, id, id);
  REQUIRE(idem.value.has_value());
  CHECK(idem.value->table == id.table);

  // id + top collapses to top, id . top returns id: both stay members.
  MuOpResult join_top = mu_plus(cls, id, top);
  REQUIRE(join_top.value.has_value());
  CHECK(join_top.value->table == top.table);
  MuOpResult meet_top = mu_cdot(cls, id, top);
  REQUIRE(meet_top.value.has_value());
  CHECK(meet_top.value->table == id.table);

  // id and swap are members, but their pointwise join and meet both break
  // the morphism conditions: the operations are checked, not assumed.
  MuOpResult join_swap = mu_plus(cls, id, swap);
  CHECK(!join_swap.value.has_value());
  CHECK(join_swap.note.find("not a morphism") != std::string::npos);
  MuOpResult meet_swap = mu_cdot(cls, id, swap);
  CHECK(!meet_swap.value.has_value());

  // The constant-to-top map earns its membership here: above {x1,x4} every
  // upper approximation is the whole universe.
  MuOpResult iota = mu_iota(cls);
  REQUIRE(iota.value.has_value());
  CHECK(iota.value->table == top.table);

  // The closed flavor coincides for total operations.
  MuClass closed = mu_class(id, MuFlavor::ClosedMorphisms, {id, up, swap, top, bottom});
  CHECK(closed.members.size() == cls.members.size());
}

TEST_CASE("class order and quotient") {
  auto sys = classical_four();
  Correspondence id = identity_map(sys);
  Correspondence id2 = identity_map(sys, "id2");
  Correspondence top = constant_map(sys, Subset::full_set(sys->universe), "top");

  MuClass cls = mu_class(id, MuFlavor::Morphisms, {id, id2, top});
  REQUIRE(cls.members.size() == 3);
  ClassOrder order = class_order(cls);

  // id and id2 share a table, so they collapse; top sits strictly above.
  CHECK(order.leq[0][1]);
  CHECK(order.leq[1][0]);
  CHECK(order.leq[0][2]);
  CHECK(!order.leq[2][0]);
  REQUIRE(order.classes.size() == 2);
  CHECK(order.member_class[0] == order.member_class[1]);
  CHECK(order.member_class[2] != order.member_class[0]);
  CHECK(order.quotient_leq[order.member_class[0]][order.member_class[2]]);
  CHECK(order.quotient_antisymmetric);

  // Quasi-order laws on the full relation.
  const std::size_t n = cls.members.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(order.leq[i][i]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (order.leq[i][j] && order.leq[j][k]) CHECK(order.leq[i][k]);
  }
}

TEST_CASE("filter agreement for sandwiched self-maps") {
  auto sys = classical_four();
  Correspondence id = identity_map(sys);
  Subset z0 = Subset::singleton(sys->universe, 0);

  FilterAgreement same = filter_agreement(id, id, z0);
  CHECK(same.agree);
  CHECK(same.f_smooth_morphism);
  CHECK(same.g_subnatural);
  CHECK(same.filter.size() == 8);  // supersets of {x1}
  REQUIRE(same.checked.size() == 2);
  CHECK(same.checked[0] == Subset::of_names(sys->universe, {"x1", "x2", "x3"}));
  CHECK(same.checked[1] == Subset::full_set(sys->universe));

  // Bad witnesses are rejected: outside X_c, or not validating the sandwich.
  CHECK_THROWS_AS(filter_agreement(id, id, Subset::full_set(sys->universe)),
                  std::invalid_argument);
  Correspondence bottom = constant_map(sys, Subset::empty_set(sys->universe), "bottom");
  CHECK_THROWS_AS(filter_agreement(id, bottom, z0), std::invalid_argument);

  // Exhaustive check on a smaller space: for every pair (f in SM_s,
  // g in SNC) with g sandwiched by f, the two maps agree on all definite
  // elements above the witness.
  auto u3 = Universe::make({"p", "q", "r"});
  ApproximationSpace sp3{u3, generate_relation(u3, RelationKind::Equivalence, {{0, 1}})};
  auto small = build_classical_rys(sp3);
  std::vector<Correspondence> fs, gs;
  for (const auto& cand : enumerate_oplus_morphisms(small, small)) {
    if (in_family(cand, Family{FamilyBase::Snc, true, true})) fs.push_back(cand);
    if (in_family(cand, Family{FamilyBase::Snc, false, false})) gs.push_back(cand);
  }
  REQUIRE(!fs.empty());
  REQUIRE(!gs.empty());
  std::size_t pairs_checked = 0;
  for (const auto& f : fs)
    for (const auto& g : gs) {
      ComparisonVerdict v = related(g, f, ComparisonKind::ThetaLu);
      if (!v.holds) continue;
      FilterAgreement rep = filter_agreement(f, g, v.witness->z0);
      CHECK(rep.agree);
      ++pairs_checked;
    }
  CHECK(pairs_checked > 0);
}

TEST_CASE("pointwise lattice operations over a sandwiched pool") {
  auto sys = classical_four();
  Correspondence id = identity_map(sys);
  Correspondence swap = swap_map(sys);
  Correspondence top = constant_map(sys, Subset::full_set(sys->universe), "top");

  LatticeOpReport rep = lattice_pointwise_ops(id, {id, swap, top});
  // top is not injective, so only id and swap survive the family filter.
  REQUIRE(rep.member_indices == std::vector<std::size_t>{0, 1});

  // Every constructed map stays sandwiched; the join of id and swap loses
  // injectivity, so the family is not preserved even though the sandwich is.
  CHECK(rep.all_sandwiched);
  CHECK(!rep.all_family_members);
  bool saw_joint = false;
  for (const auto& e : rep.entries) {
    CHECK(e.sandwiched);
    saw_joint = saw_joint || e.joint_witness_used;
    if (e.op == "oplus" && e.g == 0 && e.h == 1) CHECK(!e.family_member);
    if (e.op == "oplus" && e.g == 0 && e.h == 0) CHECK(e.family_member);
  }
  CHECK(saw_joint);

  // g^L and g^U entries exist for each member.
  std::size_t lowers = 0, uppers = 0;
  for (const auto& e : rep.entries) {
    if (e.op == "lower") ++lowers;
    if (e.op == "upper") ++uppers;
  }
  CHECK(lowers == 2);
  CHECK(uppers == 2);

  // A meet operation that is not the lattice meet of the parthood order is
  // rejected up front.
  auto broken = std::make_shared<Rys>(*sys);
  broken->odot = [](const Subset& a, const Subset& b) { return a.set_difference(b); };
  Correspondence bid = make_correspondence(broken, broken, {},
                                           ExtensionPolicy::IdentityElsewhere, "id");
  CHECK_THROWS_AS(lattice_pointwise_ops(bid, {bid}), std::invalid_argument);
}
