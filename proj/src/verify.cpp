// Claim registry implementation.  Every claim re-derives its verdict from
// scratch at the requested bounds; frozen constants appear only where the
// statement itself is a census.  Sweep order is fixed (spaces ascending by
// size, relations by seed mask, carrier elements by mask), so a claim's
// first counterexample or witness is deterministic for fixed options.

#include "rys/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rys/bigness.hpp"
#include "rys/comparison.hpp"
#include "rys/correspondence.hpp"
#include "rys/json_io.hpp"
#include "rys/prerough.hpp"

namespace rys {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Counterexample: return "counterexample";
    case ClaimStatus::WitnessFound: return "witness-found";
    case ClaimStatus::Reported: return "reported";
  }
  return "?";
}

namespace {

struct Outcome {
  ClaimStatus status = ClaimStatus::Pass;
  std::string scope;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  ClaimStatus expected = ClaimStatus::Pass;
  std::function<Outcome(const VerifyOptions&)> run;
};

// ---------------------------------------------------------------------------
// Sweep helpers

UniversePtr named_universe(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return Universe::make(std::move(names));
}

// All set partitions of {0..n-1} as block lists, in restricted-growth order.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      out.push_back(blocks);
      return;
    }
    const std::size_t existing = blocks.size();  // recursion below reallocates
    for (std::size_t bi = 0; bi < existing; ++bi) {
      blocks[bi].push_back(i);
      place(i + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({i});
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> partition_seed_pairs(
    const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& b : blocks)
    for (std::size_t i = 1; i < b.size(); ++i) pairs.emplace_back(b[i - 1], b[i]);
  return pairs;
}

// Every equivalence space with |U| in 1..max_n (one space per set partition).
std::vector<ApproximationSpace> equivalence_spaces(std::size_t max_n) {
  std::vector<ApproximationSpace> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto u = named_universe(n);
    for (const auto& blocks : set_partitions(n))
      out.push_back({u, generate_relation(u, RelationKind::Equivalence,
                                          partition_seed_pairs(blocks))});
  }
  return out;
}

// Every tolerance space with |U| in 1..max_n (one per symmetric seed mask);
// capped at 4 elements, past which the sweep is no longer exhaustive anyway.
std::vector<ApproximationSpace> tolerance_spaces(std::size_t max_n) {
  std::vector<ApproximationSpace> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto u = named_universe(n);
    std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_pairs.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> seeds;
      for (std::size_t p = 0; p < all_pairs.size(); ++p)
        if ((mask >> p) & 1u) seeds.push_back(all_pairs[p]);
      out.push_back({u, generate_relation(u, RelationKind::Tolerance, seeds)});
    }
  }
  return out;
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

Correspondence constant_map(RysPtr sys, const Subset& value, const std::string& name) {
  return table_map(sys, [&](const Subset&) { return value; }, name);
}

// ---------------------------------------------------------------------------
// The worked counterexample fixtures (the same structures the bundled data
// files describe): a four-element tolerance source, its equivalence variant,
// and the five-element classical target.

RysPtr worked_source() {
  auto u = Universe::make({"x1", "x2", "x3", "x4"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Tolerance, {{0, 1}, {1, 2}})};
  return build_tolerance_rys(sp, GranulationStyle::SuccessorNeighborhood);
}

RysPtr worked_classical_four() {
  auto u = Universe::make({"x1", "x2", "x3", "x4"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 1}, {1, 2}})};
  return build_classical_rys(sp);
}

RysPtr worked_target() {
  auto u = Universe::make({"a1", "a2", "a3", "a4", "a5"});
  ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 3}, {3, 1}})};
  return build_classical_rys(sp);
}

std::vector<std::pair<Subset, Subset>> worked_phi_rows(const RysPtr& src, const RysPtr& tgt) {
  auto s = [&](std::vector<std::string> names) { return Subset::of_names(src->universe, names); };
  auto t = [&](std::vector<std::string> names) { return Subset::of_names(tgt->universe, names); };
  return {
      {s({}), t({})},
      {s({"x1"}), t({"a1"})},
      {s({"x2"}), t({"a2", "a3"})},
      {s({"x1", "x2"}), t({"a1", "a2", "a4"})},
      {s({"x3"}), t({"a4", "a5"})},
      {s({"x1", "x3"}), t({"a1", "a4", "a5"})},
      {s({"x2", "x3"}), t({"a5"})},
      {s({"x1", "x2", "x3"}), t({"a1", "a2", "a3", "a4"})},
      {s({"x4"}), t({"a3"})},
      {s({"x1", "x4"}), t({"a1", "a3"})},
      {s({"x2", "x4"}), t({"a2", "a3", "a5"})},
      {s({"x3", "x4"}), t({"a3", "a4", "a5"})},
      {s({"x1", "x2", "x4"}), t({"a1", "a2", "a3"})},
      {s({"x1", "x3", "x4"}), t({"a1", "a3", "a4", "a5"})},
      {s({"x2", "x3", "x4"}), t({"a2", "a3", "a4", "a5"})},
      {s({"x1", "x2", "x3", "x4"}), t({"a1", "a2", "a3", "a4", "a5"})},
  };
}

Correspondence singleton_map(const RysPtr& src, const RysPtr& tgt,
                             const std::vector<std::vector<std::string>>& images,
                             const std::string& name) {
  std::vector<std::pair<Subset, Subset>> rows;
  for (std::size_t e = 0; e < images.size(); ++e)
    rows.emplace_back(Subset::singleton(src->universe, e),
                      Subset::of_names(tgt->universe, images[e]));
  return make_correspondence(src, tgt, rows, ExtensionPolicy::OplusExtension, name);
}

// ---------------------------------------------------------------------------
// Misc small utilities

std::string plural(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

Outcome fail(std::string scope, std::string detail) {
  return {ClaimStatus::Counterexample, std::move(scope), std::move(detail)};
}

Outcome pass(std::string scope, std::string detail = "") {
  return {ClaimStatus::Pass, std::move(scope), std::move(detail)};
}

Outcome witness(std::string scope, std::string detail) {
  return {ClaimStatus::WitnessFound, std::move(scope), std::move(detail)};
}

std::string space_label(const ApproximationSpace& sp) {
  std::ostringstream os;
  os << "|U|=" << sp.universe->size() << " " << to_string(sp.relation.kind()) << " pairs{";
  bool first = true;
  for (auto [a, b] : sp.relation.pairs()) {
    if (a >= b) continue;  // print the upper triangle only
    if (!first) os << ",";
    os << sp.universe->name(a) << "~" << sp.universe->name(b);
    first = false;
  }
  os << "}";
  return os.str();
}

// Closure of the seed masks under union, intersection and (when the system
// has one) complement; mirrors the term-subalgebra signature.
std::set<std::uint64_t> mask_closure(const Rys& sys, std::vector<std::uint64_t> seeds) {
  std::set<std::uint64_t> out(seeds.begin(), seeds.end());
  const std::uint64_t full = sys.universe->full_mask();
  const bool with_complement = sys.complement_op.has_value();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> now(out.begin(), out.end());
    for (std::uint64_t a : now) {
      if (with_complement && out.insert(~a & full).second) grew = true;
      for (std::uint64_t b : now) {
        if (out.insert(a | b).second) grew = true;
        if (out.insert(a & b).second) grew = true;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The registry

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> r;

    // ---- approximation spaces ---------------------------------------------

    r.push_back({"approximation-monotone",
                 "lower and upper approximations are monotone in the argument",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      auto sweep = [&](const ApproximationSpace& sp,
                       const Granulation& g) -> std::optional<std::string> {
        const std::size_t n = sp.universe->size();
        for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << n); ++bm) {
          Subset b(sp.universe, bm);
          Subset lb = lower_approx(g, b), ub = upper_approx(g, b);
          for (std::uint64_t am = bm;; am = (am - 1) & bm) {
            Subset a(sp.universe, am);
            if (!lower_approx(g, a).subset_of(lb) || !upper_approx(g, a).subset_of(ub))
              return space_label(sp) + " " + to_string(g.style()) + " A=" + a.to_string() +
                     " B=" + b.to_string();
            if (am == 0) break;
          }
        }
        return std::nullopt;
      };
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        if (auto bad = sweep(sp, granulation_from_relation(sp.relation)))
          return fail("equivalence sweep", *bad);
      }
      for (const auto& sp : tolerance_spaces(opt.max_size)) {
        ++spaces;
        if (auto bad = sweep(sp, granulation_from_relation(sp.relation)))
          return fail("tolerance sweep", *bad);
        if (auto bad = sweep(sp, block_granulation(sp.relation)))
          return fail("block sweep", *bad);
      }
      return pass(plural(spaces, "space") + ", |U| <= " + std::to_string(opt.max_size) +
                  ", all nested subset pairs");
    }});

    r.push_back({"approximation-sandwich",
                 "A^l is contained in A and A in A^u for covering granulations",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      auto sweep = [&](const ApproximationSpace& sp,
                       const Granulation& g) -> std::optional<std::string> {
        const std::size_t n = sp.universe->size();
        for (std::uint64_t am = 0; am < (std::uint64_t{1} << n); ++am) {
          Subset a(sp.universe, am);
          if (!lower_approx(g, a).subset_of(a) || !a.subset_of(upper_approx(g, a)))
            return space_label(sp) + " " + to_string(g.style()) + " A=" + a.to_string();
        }
        return std::nullopt;
      };
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        if (auto bad = sweep(sp, granulation_from_relation(sp.relation)))
          return fail("equivalence sweep", *bad);
      }
      for (const auto& sp : tolerance_spaces(opt.max_size)) {
        ++spaces;
        if (auto bad = sweep(sp, granulation_from_relation(sp.relation)))
          return fail("tolerance sweep", *bad);
        if (auto bad = sweep(sp, block_granulation(sp.relation)))
          return fail("block sweep", *bad);
      }
      return pass(plural(spaces, "space") + ", |U| <= " + std::to_string(opt.max_size));
    }});

    r.push_back({"classical-idempotence-duality",
                 "partition approximations are idempotent and l/u are complement-dual",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        Granulation g = granulation_from_relation(sp.relation);
        const std::size_t n = sp.universe->size();
        for (std::uint64_t am = 0; am < (std::uint64_t{1} << n); ++am) {
          Subset a(sp.universe, am);
          Subset l = lower_approx(g, a), u = upper_approx(g, a);
          if (lower_approx(g, l) != l || upper_approx(g, u) != u ||
              l != upper_approx(g, a.complement()).complement())
            return fail("equivalence sweep", space_label(sp) + " A=" + a.to_string());
        }
      }
      return pass(plural(spaces, "equivalence space") + ", |U| <= " +
                  std::to_string(opt.max_size));
    }});

    r.push_back({"definite-elements-boolean",
                 "partition-definite elements are exactly the unions of classes "
                 "and close under union, intersection and complement",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        Granulation g = granulation_from_relation(sp.relation);
        auto defs = definite_elements(g, DefiniteKind::Both);
        if (defs.size() != (std::size_t{1} << g.size()))
          return fail("count", space_label(sp) + ": " + std::to_string(defs.size()) +
                      " definite vs 2^" + std::to_string(g.size()) + " class unions");
        std::set<std::uint64_t> masks;
        for (const auto& d : defs) masks.insert(d.mask());
        for (const auto& d : defs) {
          if (!masks.count(~d.mask() & sp.universe->full_mask()))
            return fail("complement closure", space_label(sp) + " " + d.to_string());
          for (const auto& e : defs)
            if (!masks.count(d.mask() | e.mask()) || !masks.count(d.mask() & e.mask()))
              return fail("lattice closure", space_label(sp) + " " + d.to_string() + ", " +
                          e.to_string());
        }
      }
      return pass(plural(spaces, "equivalence space") + ", |U| <= " +
                  std::to_string(opt.max_size));
    }});

    r.push_back({"block-granules-maximal-cliques",
                 "tolerance blocks cover the universe and are exactly the maximal cliques",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      for (const auto& sp : tolerance_spaces(opt.max_size)) {
        ++spaces;
        Granulation g = block_granulation(sp.relation);
        if (!g.covers_universe()) return fail("cover", space_label(sp));
        const std::size_t n = sp.universe->size();
        for (const auto& blk : g.granules()) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (blk.members.contains(i) && blk.members.contains(j) &&
                  !sp.relation.related(i, j))
                return fail("clique", space_label(sp) + " block " + blk.members.to_string());
          for (std::size_t e = 0; e < n; ++e) {
            if (blk.members.contains(e)) continue;
            bool extends = true;
            for (std::size_t i = 0; i < n && extends; ++i)
              if (blk.members.contains(i)) extends = sp.relation.related(e, i);
            if (extends)
              return fail("maximality", space_label(sp) + " block " + blk.members.to_string() +
                          " + " + sp.universe->name(e));
          }
        }
      }
      return pass(plural(spaces, "tolerance space") + ", |U| <= " +
                  std::to_string(std::min<std::size_t>(opt.max_size, 4)));
    }});

    r.push_back({"rough-inclusion-degree",
                 "the inclusion degree k lies in [0,1], fixes identity and the "
                 "empty set at 1, and is monotone in its second argument",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      auto u = named_universe(std::min<std::size_t>(opt.max_size, 5));
      const std::size_t n = u->size();
      for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << n); ++xm) {
        Subset x(u, xm);
        if (rough_inclusion_k(x, x) != Ratio(1))
          return fail("identity", x.to_string());
        for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << n); ++ym) {
          Subset y(u, ym);
          Ratio k = rough_inclusion_k(x, y);
          if (k < Ratio(0) || k > Ratio(1)) return fail("bounds", x.to_string() + " " + y.to_string());
          if (xm == 0 && k != Ratio(1)) return fail("empty anchor", y.to_string());
          // Supersets of y can only improve the degree.
          std::uint64_t rest = ~ym & u->full_mask();
          for (std::uint64_t add = rest;; add = (add - 1) & rest) {
            if (rough_inclusion_k(x, Subset(u, ym | add)) < k)
              return fail("monotone", x.to_string() + " " + y.to_string());
            if (add == 0) break;
          }
        }
      }
      return pass("all subset pairs over |U| = " + std::to_string(n));
    }});

    // ---- granular systems --------------------------------------------------

    r.push_back({"parthood-partial-order",
                 "carrier parthood is reflexive, antisymmetric and transitive",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t checked = 0;
      for (const auto& sp : equivalence_spaces(std::min<std::size_t>(opt.max_size, 4))) {
        auto r0 = build_classical_rys(sp);
        const std::size_t m = r0->carrier.size();
        ++checked;
        for (std::size_t a = 0; a < m; ++a) {
          if (!r0->part_of(a, a)) return fail("reflexive", space_label(sp));
          for (std::size_t b = 0; b < m; ++b) {
            if (r0->part_of(a, b) && r0->part_of(b, a) && a != b)
              return fail("antisymmetric", space_label(sp));
            for (std::size_t c = 0; c < m; ++c)
              if (r0->part_of(a, b) && r0->part_of(b, c) && !r0->part_of(a, c))
                return fail("transitive", space_label(sp));
          }
        }
      }
      return pass(plural(checked, "system") + ", carrier up to 16 elements");
    }});

    r.push_back({"classical-axioms-admissible",
                 "partition systems satisfy the weak representability, lower-union "
                 "and stability axioms, hence are admissible",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        auto r0 = build_classical_rys(sp);
        for (const char* name : {"WRA", "LFU", "LS"}) {
          AxiomCheck c = check_axiom(*r0, name);
          if (!c.holds)
            return fail(space_label(sp), std::string(name) + ": " + c.detail);
        }
        if (!admissible(*r0)) return fail(space_label(sp), "admissibility flag");
      }
      return pass(plural(spaces, "equivalence space") + ", |U| <= " +
                  std::to_string(opt.max_size));
    }});

    r.push_back({"block-axiom-report",
                 "axiom satisfaction over block and neighbourhood systems, recorded",
                 ClaimStatus::Reported, [](const VerifyOptions& opt) {
      std::map<std::string, std::size_t> profile;
      std::size_t spaces = 0;
      for (const auto& sp : tolerance_spaces(opt.max_size)) {
        ++spaces;
        for (auto style : {GranulationStyle::SuccessorNeighborhood, GranulationStyle::Block}) {
          auto r0 = build_tolerance_rys(sp, style);
          std::string key = to_string(style) + ":";
          for (const auto& name : satisfied_axioms(*r0)) key += " " + name;
          ++profile[key];
        }
      }
      std::ostringstream os;
      for (const auto& [key, count] : profile) os << "[" << key << "] x" << count << "; ";
      Outcome o;
      o.status = ClaimStatus::Reported;
      o.scope = plural(spaces, "tolerance space") + ", two granulation styles";
      o.detail = os.str();
      return o;
    }});

    r.push_back({"self-evolution-identity",
                 "a system evolving into itself keeps its axioms and operator "
                 "shape; admissible systems earn the structurally-same label",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t systems = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        auto r0 = build_classical_rys(sp);
        ++systems;
        if (classify_evolution(*r0, *r0).label != EvolutionLabel::Sse)
          return fail("classical", space_label(sp));
      }
      for (const auto& sp : tolerance_spaces(std::min<std::size_t>(opt.max_size, 3))) {
        auto r0 = build_tolerance_rys(sp, GranulationStyle::Block);
        ++systems;
        EvolutionReport rep = classify_evolution(*r0, *r0);
        if (!rep.axiom_inclusion || !rep.equi_representable)
          return fail("block", space_label(sp));
        EvolutionLabel want =
            admissible(*r0) ? EvolutionLabel::Sse : EvolutionLabel::SubSimilar;
        if (rep.label != want)
          return fail("block", space_label(sp) + " label " + to_string(rep.label));
      }
      return pass(plural(systems, "system"));
    }});

    // ---- correspondences ---------------------------------------------------

    r.push_back({"morphism-census",
                 "morphism counts between the discrete three-element systems "
                 "match the frozen census (125 full, 729 join, 24 bijections on "
                 "the two-element carrier)",
                 ClaimStatus::Pass, [](const VerifyOptions&) {
      auto mk = [](std::vector<std::string> names) {
        auto u = Universe::make(std::move(names));
        ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {})};
        return build_classical_rys(sp);
      };
      auto a3 = mk({"p", "q", "r"}), b3 = mk({"u", "v", "w"});
      auto morphisms = enumerate_morphisms(a3, b3);
      if (morphisms.size() != 125)
        return fail("full morphisms", std::to_string(morphisms.size()));
      auto joins = enumerate_oplus_morphisms(a3, b3);
      if (joins.size() != 729)
        return fail("join morphisms", std::to_string(joins.size()));
      std::set<std::vector<std::size_t>> tables;
      for (const auto& j : joins) tables.insert(j.table);
      for (const auto& m : morphisms)
        if (!tables.count(m.table)) return fail("containment", "full morphism outside joins");
      auto two = mk({"p", "q"});
      if (enumerate_injective_maps(two, two).size() != 24)
        return fail("bijections", "expected 24");
      return pass("discrete systems on 3 and 2 elements");
    }});

    r.push_back({"identity-closed-morphism",
                 "the identity correspondence is a smooth closed morphism with "
                 "both inclusion bounds equal to one",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t spaces = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        ++spaces;
        auto r0 = build_classical_rys(sp);
        Correspondence id = identity_map(r0);
        ClassificationCertificate cert = classify(id);
        if (!cert.is_morphism || !cert.is_closed_morphism || !cert.smooth)
          return fail(space_label(sp), "certificate flags");
        AlphaBetaBounds b = alpha_beta_bounds(id);
        if (b.alpha != Ratio(1) || b.beta_infinite || b.beta != Ratio(1))
          return fail(space_label(sp), "bounds not 1/1");
      }
      return pass(plural(spaces, "equivalence space") + ", |U| <= " +
                  std::to_string(opt.max_size));
    }});

    r.push_back({"snc-label-coverage",
                 "every nontrivial injective sub-natural correspondence between "
                 "partition systems carries one of the four case labels",
                 ClaimStatus::Counterexample, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size, 3);
      std::size_t scanned = 0, subnatural = 0, nontrivial = 0, unlabeled = 0;
      std::size_t confirmed = 0, agreement_checks = 0;
      std::string first;
      for (std::size_t ns = 1; ns <= bound; ++ns) {
        auto su = named_universe(ns, "x");
        for (const auto& sb : set_partitions(ns)) {
          ApproximationSpace ssp{su, generate_relation(su, RelationKind::Equivalence,
                                                       partition_seed_pairs(sb))};
          auto src = build_classical_rys(ssp);
          for (std::size_t nt = ns; nt <= bound; ++nt) {
            auto tu = named_universe(nt, "a");
            for (const auto& tb : set_partitions(nt)) {
              ApproximationSpace tsp{tu, generate_relation(tu, RelationKind::Equivalence,
                                                           partition_seed_pairs(tb))};
              auto tgt = build_classical_rys(tsp);

              // Target-side tables reused across the whole map enumeration.
              std::vector<std::uint64_t> gran_masks;
              for (const auto& g : tgt->granulation.granules())
                gran_masks.push_back(g.members.mask());
              auto closure_all = mask_closure(*tgt, gran_masks);
              const std::size_t tn = tu->size();
              std::vector<std::uint64_t> upper_of(std::uint64_t{1} << tn);
              for (std::uint64_t m = 0; m < upper_of.size(); ++m)
                upper_of[m] = upper_approx(tgt->granulation, Subset(tu, m)).mask();
              const std::uint64_t tfull = tu->full_mask();

              for (const auto& c : enumerate_injective_maps(src, tgt)) {
                ++scanned;
                auto img_mask = [&](const Subset& s) {
                  return c.image(s).mask();
                };
                // Sub-naturality, evaluated directly over masks: granule
                // images land in the granule-term closure, and in the
                // closure of the granules their singletons touch.
                bool snc = true;
                for (const auto& g : src->granulation.granules()) {
                  std::uint64_t img = img_mask(g.members);
                  if (!closure_all.count(img)) { snc = false; break; }
                  std::vector<std::uint64_t> seeds;
                  std::uint64_t phi_x =
                      img_mask(Subset::singleton(su, g.generator.value()));
                  for (const auto& tg : tgt->granulation.granules())
                    if (tg.members.mask() & phi_x) seeds.push_back(tg.members.mask());
                  if (!mask_closure(*tgt, seeds).count(img)) { snc = false; break; }
                }
                if (!snc) continue;
                ++subnatural;
                if (trivial_on_granules(c)) continue;
                ++nontrivial;

                // The four case labels, evaluated over the same masks.
                bool labeled = false;
                for (int variant = 1; variant <= 4 && !labeled; ++variant) {
                  bool holds = true;
                  for (std::size_t x = 0; x < ns && holds; ++x) {
                    Subset cls = upper_approx(src->granulation, Subset::singleton(su, x));
                    std::uint64_t lhs = img_mask(cls);
                    std::uint64_t rhs = 0;
                    if (variant <= 2) {
                      rhs = upper_of[img_mask(Subset::singleton(su, x))];
                    } else {
                      for (std::size_t y = 0; y < ns; ++y)
                        if (cls.contains(y))
                          rhs |= upper_of[img_mask(Subset::singleton(su, y))];
                    }
                    if (variant == 2 || variant == 4) rhs = ~rhs & tfull;
                    holds = lhs == rhs;
                  }
                  labeled = holds;
                }

                // Cross-check a slice of the sweep against the library's own
                // classifier; every candidate counterexample is confirmed.
                bool check_now = !labeled || (nontrivial % 97 == 1);
                if (check_now && confirmed < 200) {
                  ++confirmed;
                  ClassificationCertificate cert = classify(c);
                  if (!cert.is_snc)
                    return fail("oracle disagreement",
                                "mask test accepted a non-sub-natural map");
                  ++agreement_checks;
                  if (cert.partition_case.has_value() != labeled)
                    return fail("oracle disagreement",
                                "label presence differs from the classifier");
                }
                if (!labeled) {
                  ++unlabeled;
                  if (first.empty()) {
                    std::ostringstream os;
                    os << "source " << space_label(ssp) << "; target " << space_label(tsp)
                       << "; map";
                    for (std::size_t i = 0; i < c.table.size(); ++i)
                      os << " " << src->carrier[i].to_string() << "->"
                         << tgt->carrier[c.table[i]].to_string();
                    first = os.str();
                  }
                }
              }
            }
          }
        }
      }
      std::ostringstream os;
      os << scanned << " injective maps, " << subnatural << " sub-natural, " << nontrivial
         << " nontrivial, " << unlabeled << " unlabeled (" << agreement_checks
         << " classifier cross-checks)";
      if (!first.empty()) os << "; first: " << first;
      Outcome o;
      o.status = unlabeled ? ClaimStatus::Counterexample : ClaimStatus::Pass;
      o.scope = "all partition-system pairs, |U| <= " + std::to_string(bound);
      o.detail = os.str();
      return o;
    }});

    r.push_back({"snc-without-oplus-witness",
                 "an injective sub-natural correspondence that is not a join "
                 "morphism exists (the worked four-to-five map)",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto src = worked_source();
      auto tgt = worked_target();
      Correspondence phi = make_correspondence(src, tgt, worked_phi_rows(src, tgt),
                                               ExtensionPolicy::ExplicitTotal, "phi");
      ClassificationCertificate cert = classify(phi);
      if (!cert.is_snc || cert.is_oplus_morphism)
        return fail("worked map phi", "expected sub-natural and not a join morphism");
      Subset nx1 = Subset::of_names(src->universe, {"x1", "x2"});
      Subset nx3 = Subset::of_names(src->universe, {"x2", "x3"});
      if (phi.image(nx1.set_union(nx3)) == phi.image(nx1).set_union(phi.image(nx3)))
        return fail("worked map phi", "canonical witness did not separate");
      return witness("fixed four-to-five map",
                     "phi(n(x1)|n(x3)) = " + phi.image(nx1.set_union(nx3)).to_string() +
                     " vs " + phi.image(nx1).set_union(phi.image(nx3)).to_string() +
                     "; " + (cert.oplus_witness ? cert.oplus_witness->detail : ""));
    }});

    r.push_back({"oplus-without-snc-witness",
                 "an injective join morphism that is not sub-natural exists "
                 "(the singleton extension sigma)",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto src = worked_source();
      auto tgt = worked_target();
      Correspondence sigma =
          singleton_map(src, tgt, {{"a1"}, {"a2"}, {"a3"}, {"a4"}}, "sigma");
      ClassificationCertificate cert = classify(sigma);
      if (!cert.injective || !cert.is_oplus_morphism || cert.is_snc)
        return fail("worked map sigma", "expected injective join morphism outside SNC");
      auto it = cert.granule_witnesses.find("n(x1)");
      std::string note = it == cert.granule_witnesses.end() ? "" : it->second;
      if (note.find("no term") == std::string::npos)
        return fail("worked map sigma", "n(x1) image unexpectedly representable");
      return witness("fixed four-to-five map", note);
    }});

    r.push_back({"pon-noninjective-witness",
                 "a proto-natural correspondence need not be injective on granules "
                 "(the collapsing tau)",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto src = worked_source();
      auto tgt = worked_target();
      Correspondence tau =
          singleton_map(src, tgt, {{"a3"}, {"a5"}, {"a3"}, {"a5"}}, "tau");
      ClassificationCertificate cert = classify(tau);
      if (!cert.is_pon || cert.injective_on_granules || cert.is_snc)
        return fail("worked map tau", "expected proto-natural, not granule-injective");
      return witness("fixed four-to-five map",
                     "n(x1) and n(x2) share the image " +
                     tau.image(Subset::of_names(src->universe, {"x1", "x2"})).to_string());
    }});

    r.push_back({"collapse-nonrepresentable-witness",
                 "a join morphism can send a definite element outside the "
                 "granule-term closure of the target",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto src = worked_classical_four();
      auto tgt = worked_target();
      Correspondence sigma =
          singleton_map(src, tgt, {{"a1"}, {"a1"}, {"a3"}, {"a4"}}, "sigma-va");
      RepresentabilityReport rep = definite_representability(sigma);
      if (rep.ok) return fail("collapse map", "all definite images representable");
      for (const auto& e : rep.entries)
        if (e.definite == Subset::of_names(src->universe, {"x1", "x2", "x3"})) {
          if (e.representable || e.image != Subset::of_names(tgt->universe, {"a1", "a3"}))
            return fail("collapse map", "expected {a1,a3} non-representable");
          return witness("fixed four-to-five join morphism",
                         "image of {x1,x2,x3} is {a1,a3}, no term over target granules");
        }
      return fail("collapse map", "definite element {x1,x2,x3} not reported");
    }});

    r.push_back({"alpha-beta-bounds-exist",
                 "both inclusion-degree bounds exist (finite or flagged infinite) "
                 "for every enumerated morphism, with alpha <= beta and the "
                 "identity pinned at one",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size, 3);
      std::size_t checked = 0;
      for (std::size_t ns = 1; ns <= bound; ++ns) {
        auto su = named_universe(ns, "x");
        for (const auto& sb : set_partitions(ns)) {
          ApproximationSpace ssp{su, generate_relation(su, RelationKind::Equivalence,
                                                       partition_seed_pairs(sb))};
          auto src = build_classical_rys(ssp);
          for (std::size_t nt = 1; nt <= bound; ++nt) {
            auto tu = named_universe(nt, "a");
            for (const auto& tb : set_partitions(nt)) {
              ApproximationSpace tsp{tu, generate_relation(tu, RelationKind::Equivalence,
                                                           partition_seed_pairs(tb))};
              auto tgt = build_classical_rys(tsp);
              for (const auto& c : enumerate_morphisms(src, tgt)) {
                ++checked;
                AlphaBetaBounds b = alpha_beta_bounds(c);
                if (b.alpha < Ratio(0)) return fail("alpha sign", c.name);
                if (!b.beta_infinite && b.alpha > b.beta)
                  return fail("ordering", space_label(ssp) + " -> " + space_label(tsp));
              }
            }
          }
          Correspondence id = identity_map(src);
          AlphaBetaBounds ib = alpha_beta_bounds(id);
          if (ib.alpha != Ratio(1) || ib.beta_infinite || ib.beta != Ratio(1))
            return fail("identity bounds", space_label(ssp));
        }
      }
      return pass(plural(checked, "enumerated morphism") + ", |U| <= " +
                  std::to_string(bound));
    }});

    // ---- comparison relations ----------------------------------------------

    r.push_back({"theta-lu-reflexive",
                 "every correspondence is sandwiched by its own approximations "
                 "whenever the witness domain is nonempty",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t checked = 0, spaces = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        if (sp.universe->size() < 3) continue;  // no admissible base below 3
        ++spaces;
        auto r0 = build_classical_rys(sp);
        std::vector<Correspondence> pool{identity_map(r0), upper_map(r0),
                                         constant_map(r0, r0->top, "top")};
        for (auto& c : sample_correspondences(r0, r0, std::max<std::size_t>(
                 10, opt.samples / 20), opt.seed))
          pool.push_back(c);
        for (const auto& f : pool) {
          ++checked;
          ComparisonVerdict v = related(f, f, ComparisonKind::ThetaLu);
          if (!v.holds || !check_witness(f, f, ComparisonKind::ThetaLu, *v.witness))
            return fail(space_label(sp), "map " + f.name);
        }
      }
      return pass(plural(checked, "map") + " over " + plural(spaces, "space") +
                  " with nonempty witness domain (|U| >= 3), seed " +
                  std::to_string(opt.seed));
    }});

    r.push_back({"theta-asymmetry-witness",
                 "the sandwich relation is not symmetric: the upper map lies in "
                 "the identity's class but not conversely",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto r0 = worked_classical_four();
      Correspondence id = identity_map(r0);
      Correspondence up = upper_map(r0);
      ComparisonVerdict fwd = related(up, id, ComparisonKind::ThetaLu);
      ComparisonVerdict back = related(id, up, ComparisonKind::ThetaLu);
      if (!fwd.holds || back.holds)
        return fail("four-element system", "expected one-directional sandwich");
      return witness("identity vs upper map on the four-element system",
                     "witness base " + fwd.witness->z0.to_string() +
                     "; reverse direction: " + back.reason);
    }});

    r.push_back({"mu-class-quasi-order",
                 "the pointwise order on a morphism class is a quasi-order whose "
                 "quotient is a partial order",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t classes = 0, members = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        if (sp.universe->size() < 3) continue;
        auto r0 = build_classical_rys(sp);
        std::vector<Correspondence> pool =
            enumerate_oplus_morphisms(r0, r0, std::max<std::size_t>(50, opt.samples / 4));
        for (auto& c : sample_correspondences(r0, r0, opt.samples / 20, opt.seed + 1))
          pool.push_back(c);
        MuClass cls = mu_class(identity_map(r0), MuFlavor::Morphisms, pool);
        ++classes;
        members += cls.members.size();
        ClassOrder order = class_order(cls);
        const std::size_t n = cls.members.size();
        for (std::size_t i = 0; i < n; ++i) {
          if (!order.leq[i][i]) return fail(space_label(sp), "reflexivity");
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              if (order.leq[i][j] && order.leq[j][k] && !order.leq[i][k])
                return fail(space_label(sp), "transitivity");
        }
        if (!order.quotient_antisymmetric)
          return fail(space_label(sp), "quotient antisymmetry");
      }
      return pass(plural(classes, "class") + ", " + plural(members, "member") +
                  ", seed " + std::to_string(opt.seed));
    }});

    r.push_back({"filter-agreement-on-definites",
                 "a sub-natural map sandwiched by a smooth join morphism agrees "
                 "with it on every definite element above the witness",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t pairs = 0;
      // Exhaustive on the three-element pair-space, sampled at four.
      auto u3 = named_universe(3, "p");
      ApproximationSpace sp3{u3, generate_relation(u3, RelationKind::Equivalence, {{0, 1}})};
      auto small = build_classical_rys(sp3);
      std::vector<Correspondence> fs, gs;
      for (const auto& cand : enumerate_oplus_morphisms(small, small)) {
        if (in_family(cand, Family{FamilyBase::Snc, true, true})) fs.push_back(cand);
        if (in_family(cand, Family{FamilyBase::Snc, false, false})) gs.push_back(cand);
      }
      for (const auto& f : fs)
        for (const auto& g : gs) {
          ComparisonVerdict v = related(g, f, ComparisonKind::ThetaLu);
          if (!v.holds) continue;
          ++pairs;
          if (!filter_agreement(f, g, v.witness->z0).agree)
            return fail("three-element sweep", "pair " + f.name + ", " + g.name);
        }
      if (opt.max_size >= 4) {
        auto r4 = worked_classical_four();
        std::vector<Correspondence> pool{identity_map(r4), upper_map(r4)};
        for (auto& c : sample_correspondences(r4, r4, opt.samples / 4, opt.seed + 2))
          pool.push_back(c);
        std::vector<Correspondence> f4, g4;
        for (const auto& cand : pool) {
          if (in_family(cand, Family{FamilyBase::Snc, true, true})) f4.push_back(cand);
          if (in_family(cand, Family{FamilyBase::Snc, false, false})) g4.push_back(cand);
        }
        for (const auto& f : f4)
          for (const auto& g : g4) {
            ComparisonVerdict v = related(g, f, ComparisonKind::ThetaLu);
            if (!v.holds) continue;
            ++pairs;
            if (!filter_agreement(f, g, v.witness->z0).agree)
              return fail("four-element sample", "pair " + f.name + ", " + g.name);
          }
      }
      return pass(plural(pairs, "hypothesis pair") + ", zero violations, seed " +
                  std::to_string(opt.seed));
    }});

    r.push_back({"pointwise-ops-sandwiched",
                 "pointwise join, meet, lower and upper of sandwiched members "
                 "stay sandwiched; family preservation is recorded",
                 ClaimStatus::Pass, [](const VerifyOptions&) {
      auto r0 = worked_classical_four();
      Correspondence id = identity_map(r0);
      LatticeOpReport rep =
          lattice_pointwise_ops(id, {id, upper_map(r0), constant_map(r0, r0->top, "top")});
      if (!rep.all_sandwiched) return fail("four-element pool", "a result left the sandwich");
      std::size_t kept = 0;
      for (const auto& e : rep.entries) kept += e.family_member ? 1 : 0;
      return pass(plural(rep.entries.size(), "operation"),
                  std::to_string(kept) + " of " + std::to_string(rep.entries.size()) +
                  " results stayed in the family");
    }});

    // ---- bigness predicates ------------------------------------------------

    r.push_back({"b1-implies-b2",
                 "every upward-closed predicate keeps upper approximations big",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      std::size_t preds = 0;
      for (const auto& sp : equivalence_spaces(bound)) {
        auto r0 = build_classical_rys(sp);
        for (const auto& big : enumerate_up_closed_predicates(r0)) {
          ++preds;
          if (!check_bigness_axiom(big, BignessAxiom::B1).holds)
            return fail(space_label(sp), "enumerated predicate misses B1");
          BignessAxiomReport b2 = check_bigness_axiom(big, BignessAxiom::B2);
          if (!b2.holds) return fail(space_label(sp), b2.detail);
        }
      }
      return pass(plural(preds, "B1 predicate") + " over carriers up to " +
                  std::to_string(std::size_t{1} << bound) + " elements, exhaustive");
    }});

    r.push_back({"b1-b3-same-satisfiers",
                 "with reflexive parthood the two upward axioms have identical "
                 "satisfier sets",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size, 3);
      std::size_t preds = 0;
      for (const auto& sp : equivalence_spaces(bound)) {
        auto r0 = build_classical_rys(sp);
        const std::size_t m = r0->carrier.size();
        for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << m); ++pm) {
          std::vector<Subset> members;
          for (std::size_t i = 0; i < m; ++i)
            if ((pm >> i) & 1u) members.push_back(r0->carrier[i]);
          BignessPredicate big = extensional_predicate(r0, members);
          ++preds;
          if (check_bigness_axiom(big, BignessAxiom::B1).holds !=
              check_bigness_axiom(big, BignessAxiom::B3).holds)
            return fail(space_label(sp), "predicate mask " + std::to_string(pm));
        }
      }
      return pass(plural(preds, "extensional predicate") + ", |U| <= " +
                  std::to_string(bound) + ", exhaustive");
    }});

    r.push_back({"bc2-independence-witness",
                 "a principal up-set can satisfy all bigness axioms except the "
                 "lower-approximation one",
                 ClaimStatus::WitnessFound, [](const VerifyOptions&) {
      auto r0 = worked_classical_four();
      BignessPredicate big =
          upset_predicate(r0, Subset::of_names(r0->universe, {"x4"}));
      std::vector<std::string> holds, fails;
      for (auto ax : {BignessAxiom::B1, BignessAxiom::B2, BignessAxiom::B3,
                      BignessAxiom::BC1, BignessAxiom::BC2, BignessAxiom::BC3,
                      BignessAxiom::BC4, BignessAxiom::BC5, BignessAxiom::BC6})
        (check_bigness_axiom(big, ax).holds ? holds : fails).push_back(to_string(ax));
      if (fails != std::vector<std::string>{"BC2"})
        return fail("up-set of {x4}", "unexpected failure profile");
      BignessAxiomReport rep = check_bigness_axiom(big, BignessAxiom::BC2);
      std::string cx;
      for (const auto& s : rep.counterexample) cx += s.to_string() + " ";
      return witness("up-set of {x4} on the four-element system",
                     "BC2 fails at " + cx + "; all other axioms hold");
    }});

    r.push_back({"delta-reproducibility",
                 "anchored predicates are reproducible from their anchor and variant",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t built = 0;
      for (const auto& sp : equivalence_spaces(std::min<std::size_t>(opt.max_size, 3))) {
        auto r0 = build_classical_rys(sp);
        for (auto variant : {DeltaVariant::D1, DeltaVariant::D2, DeltaVariant::D3,
                             DeltaVariant::D4, DeltaVariant::D5})
          for (const auto& x0 : r0->carrier) {
            std::optional<BignessPredicate> one;
            try {
              one = delta_predicate(r0, x0, variant);
            } catch (const std::invalid_argument&) {
              continue;  // anchor fails the variant's side condition
            }
            ++built;
            BignessPredicate two = delta_predicate(r0, x0, variant);
            if (one->holds != two.holds)
              return fail(space_label(sp), "variant rerun differs at " + x0.to_string());
          }
      }
      return pass(plural(built, "anchored predicate") + " rebuilt twice");
    }});

    r.push_back({"gamma-reflexive",
                 "every map grows roughly within itself, for any bigness predicate",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t checked = 0;
      for (const auto& sp : equivalence_spaces(std::min<std::size_t>(opt.max_size, 4))) {
        auto r0 = build_classical_rys(sp);
        std::vector<Correspondence> pool{identity_map(r0), upper_map(r0)};
        for (auto& c : sample_correspondences(r0, r0, 10, opt.seed + 3)) pool.push_back(c);
        std::vector<BignessPredicate> bigs{
            delta_predicate(r0, Subset::empty_set(sp.universe), DeltaVariant::D2),
            upset_predicate(r0, r0->carrier[r0->carrier.size() / 2]),
            extensional_predicate(r0, {})};
        for (const auto& f : pool)
          for (const auto& big : bigs) {
            ++checked;
            GrowthVerdict v = rough_growth(f, f, big);
            if (!v.holds) return fail(space_label(sp), "map " + f.name + ": " + v.detail);
          }
      }
      return pass(plural(checked, "map/predicate pair"));
    }});

    // ---- quotient algebras -------------------------------------------------

    r.push_back({"quotient-size-formula",
                 "the rough-equality quotient has one state pair per class: "
                 "three for classes of two or more, two for singletons",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      std::size_t spaces = 0;
      for (std::size_t n = 1; n <= bound; ++n) {
        auto u = named_universe(n);
        for (const auto& blocks : set_partitions(n)) {
          ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence,
                                                     partition_seed_pairs(blocks))};
          ++spaces;
          std::size_t expect = 1;
          for (const auto& b : blocks) expect *= b.size() >= 2 ? 3 : 2;
          PreRoughAlgebra q = quotient_by_rough_equality(sp);
          if (q.size() != expect)
            return fail(space_label(sp), std::to_string(q.size()) + " classes, expected " +
                        std::to_string(expect));
        }
      }
      return pass(plural(spaces, "equivalence space") + ", |U| <= " + std::to_string(bound));
    }});

    r.push_back({"prerough-axiom-suite",
                 "every rough-equality quotient satisfies the full axiom suite, "
                 "including lattice distributivity",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      std::size_t spaces = 0;
      for (const auto& sp : equivalence_spaces(bound)) {
        ++spaces;
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        PreRoughAxiomReport rep = check_prerough_axioms(q);
        if (!rep.all_pass || !rep.distributivity.holds) {
          std::string bad;
          for (const auto& e : rep.axioms)
            if (!e.holds) bad += e.name + " ";
          if (!rep.distributivity.holds) bad += "lattice-distributivity";
          return fail(space_label(sp), bad);
        }
      }
      return pass(plural(spaces, "quotient") + ", |U| <= " + std::to_string(bound));
    }});

    r.push_back({"three-chain-trivial-filters",
                 "the three-element chain quotient has only trivial L-filters",
                 ClaimStatus::Pass, [](const VerifyOptions&) {
      auto u = named_universe(2, "e");
      ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 1}})};
      PreRoughAlgebra q = quotient_by_rough_equality(sp);
      if (q.size() != 3) return fail("chain", "expected 3 classes");
      for (const auto& k : enumerate_filters(q))
        if (k.l_filter && k.nontrivial)
          return fail("chain", "nontrivial L-filter found");
      return pass("quotient of the glued two-element space");
    }});

    r.push_back({"six-element-nontrivial-filter",
                 "the six-element quotient carries the frozen nontrivial lattice "
                 "L-filter of upper-state classes, with its supremal companion",
                 ClaimStatus::Pass, [](const VerifyOptions&) {
      auto u = named_universe(4, "x");
      ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence,
                                                 {{0, 1}, {1, 2}})};
      PreRoughAlgebra q = quotient_by_rough_equality(sp);
      if (q.size() != 6) return fail("six-element quotient", "size");
      auto filters = enumerate_filters(q);
      const FilterRecord* target = nullptr;
      for (const auto& k : filters)
        if (k.elements == std::vector<std::size_t>{3, 4, 5}) target = &k;
      if (!target || !target->l_filter || !target->lattice || !target->nontrivial)
        return fail("six-element quotient", "filter {3,4,5} flags");
      SupremalResult s = supremal(q, *target);
      if (s.kplus != std::vector<std::size_t>{2, 5})
        return fail("six-element quotient", "supremal companion");
      std::string labels;
      for (std::size_t e : target->elements) labels += q.labels[e] + " ";
      return pass("fixed six-element quotient",
                  "filter " + labels + "with companion " + q.labels[2] + " " + q.labels[5]);
    }});

    r.push_back({"cofine-iff-supremal-trivial",
                 "a lattice L-filter is cofine exactly when its supremal "
                 "companion collapses to the top",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      std::size_t filters = 0;
      for (const auto& sp : equivalence_spaces(bound)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        for (const auto& k : enumerate_filters(q, 64)) {
          if (!k.l_filter || !k.lattice) continue;
          ++filters;
          if (!supremal(q, k).cofine_iff_kplus_trivial)
            return fail(space_label(sp), "filter of " + std::to_string(k.elements.size()) +
                        " elements");
        }
      }
      return pass(plural(filters, "lattice L-filter") + " over all quotients, |U| <= " +
                  std::to_string(bound));
    }});

    r.push_back({"paste-preserves-filter-triviality",
                 "pasting a complementary middle pair preserves the absence of "
                 "nontrivial lattice L-filters",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      std::size_t pastes = 0;
      for (const auto& sp : equivalence_spaces(bound)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        if (q.size() > 13) continue;
        bool base_clean = true;
        for (const auto& k : enumerate_filters(q, 64))
          if (k.l_filter && k.nontrivial) base_clean = false;
        if (!base_clean) continue;
        PreRoughConstruction once = paste(q);
        ++pastes;
        if (once.has_nontrivial_lattice_l_filter)
          return fail(space_label(sp), "first paste");
        if (once.algebra.size() + 2 <= 15) {
          PreRoughConstruction twice = paste(once.algebra);
          ++pastes;
          if (twice.has_nontrivial_lattice_l_filter)
            return fail(space_label(sp), "second paste");
        }
      }
      return pass(plural(pastes, "pasted algebra") + ", two levels, carrier <= 15");
    }});

    r.push_back({"product-filter-triviality",
                 "componentwise products preserve the absence of nontrivial "
                 "lattice L-filters",
                 ClaimStatus::Counterexample, [](const VerifyOptions& opt) {
      const std::size_t bound = std::min<std::size_t>(opt.max_size + 1, 5);
      // Collect the property-holding quotients once.
      std::vector<std::pair<std::string, PreRoughAlgebra>> clean;
      for (const auto& sp : equivalence_spaces(bound)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        bool base_clean = true;
        for (const auto& k : enumerate_filters(q, 64))
          if (k.l_filter && k.nontrivial) base_clean = false;
        if (base_clean) clean.emplace_back(space_label(sp), q);
      }
      std::size_t products = 0, broken = 0;
      std::string first;
      for (const auto& [la, qa] : clean)
        for (const auto& [lb, qb] : clean) {
          if (qa.size() * qb.size() > 15) continue;
          PreRoughConstruction prod = product(qa, qb);
          ++products;
          if (prod.has_nontrivial_lattice_l_filter) {
            ++broken;
            if (first.empty()) {
              first = la + " x " + lb + "; witness filter {";
              for (std::size_t e : prod.nontrivial_witness)
                first += prod.algebra.labels[e] + " ";
              first += "}";
            }
          }
        }
      Outcome o;
      o.status = broken ? ClaimStatus::Counterexample : ClaimStatus::Pass;
      o.scope = plural(products, "product") + " of property-holding quotients, carrier <= 15";
      o.detail = std::to_string(broken) + " of " + std::to_string(products) +
                 " products acquire a nontrivial lattice L-filter" +
                 (first.empty() ? "" : "; first: " + first);
      return o;
    }});

    r.push_back({"paste-distributivity-report",
                 "axiom status of the pasted three-chain, with downstream checks "
                 "running to completion",
                 ClaimStatus::Reported, [](const VerifyOptions&) {
      auto u = named_universe(2, "e");
      ApproximationSpace sp{u, generate_relation(u, RelationKind::Equivalence, {{0, 1}})};
      PreRoughConstruction pc = paste(quotient_by_rough_equality(sp));
      std::string failing;
      for (const auto& e : pc.axioms.axioms)
        if (!e.holds) failing += e.name + " ";
      if (!pc.axioms.distributivity.holds) failing += "lattice-distributivity";
      // Downstream structure checks must survive the non-distributive algebra.
      try {
        auto filters = enumerate_filters(pc.algebra);
        supremal_family(pc.algebra);
        for (const auto& k : filters)
          if (k.l_filter) ocpr_build(pc.algebra, k);
      } catch (const std::exception& e) {
        return fail("pasted three-chain", std::string("downstream check threw: ") + e.what());
      }
      Outcome o;
      o.status = ClaimStatus::Reported;
      o.scope = "paste of the three-element chain";
      o.detail = failing.empty() ? "all axioms hold" : "failing: " + failing;
      return o;
    }});

    r.push_back({"ocpr-partial-order",
                 "the induced big-join order is a partial order compatible with "
                 "both approximation operators, for every L-filter",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t systems = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        if (q.size() > opt.algebra_bound) continue;
        for (const auto& k : enumerate_filters(q, 64)) {
          if (!k.l_filter) continue;
          OcprSystem sys = ocpr_build(q, k);
          ++systems;
          if (!sys.partial_order || !sys.lu_compatible || !sys.k_restriction_matches)
            return fail(space_label(sp), "filter of " + std::to_string(k.elements.size()) +
                        " elements");
        }
      }
      return pass(plural(systems, "system") + ", carrier <= " +
                  std::to_string(opt.algebra_bound));
    }});

    r.push_back({"ocpr-absorption-witness",
                 "some big-join system fails the absorption laws",
                 ClaimStatus::WitnessFound, [](const VerifyOptions& opt) {
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        if (q.size() > opt.algebra_bound) continue;
        for (const auto& k : enumerate_filters(q, 64)) {
          if (!k.l_filter) continue;
          OcprSystem sys = ocpr_build(q, k);
          if (sys.absorption_failure) {
            auto [x, y] = *sys.absorption_failure;
            return witness(space_label(sp),
                           "absorption fails at (" + q.labels[x] + ", " + q.labels[y] +
                           ") for a filter of " + std::to_string(k.elements.size()) +
                           " elements");
          }
        }
      }
      return fail("sweep", "no absorption failure found");
    }});

    r.push_back({"supremal-involution",
                 "the supremal map is an antitone involution on the lattice "
                 "L-filters of every tested quotient",
                 ClaimStatus::Pass, [](const VerifyOptions& opt) {
      std::size_t filters = 0;
      for (const auto& sp : equivalence_spaces(opt.max_size)) {
        PreRoughAlgebra q = quotient_by_rough_equality(sp);
        if (q.size() > 16) continue;
        auto recs = enumerate_filters(q, 64);
        std::vector<const FilterRecord*> lattice;
        for (const auto& k : recs)
          if (k.l_filter && k.lattice) lattice.push_back(&k);
        for (const FilterRecord* k : lattice) {
          ++filters;
          SupremalResult s = supremal(q, *k);
          // Find the record for K+ and apply the map again.
          const FilterRecord* plus = nullptr;
          for (const auto& rec : recs)
            if (rec.elements == s.kplus) plus = &rec;
          if (!plus || !plus->l_filter || !plus->lattice)
            return fail(space_label(sp), "companion is not a lattice L-filter");
          if (supremal(q, *plus).kplus != k->elements)
            return fail(space_label(sp), "double companion differs");
          for (const FilterRecord* k2 : lattice) {
            bool inc = std::includes(k2->elements.begin(), k2->elements.end(),
                                     k->elements.begin(), k->elements.end());
            if (inc) {
              SupremalResult s2 = supremal(q, *k2);
              if (!std::includes(s.kplus.begin(), s.kplus.end(), s2.kplus.begin(),
                                 s2.kplus.end()))
                return fail(space_label(sp), "companion map is not antitone");
            }
          }
        }
      }
      return pass(plural(filters, "lattice L-filter") + ", quotients up to 16 classes");
    }});

    // ---- reporting ---------------------------------------------------------

    r.push_back({"report-determinism",
                 "serialized reports are byte-identical across repeated runs",
                 ClaimStatus::Pass, [](const VerifyOptions&) {
      auto src = worked_source();
      auto tgt = worked_target();
      Correspondence phi = make_correspondence(src, tgt, worked_phi_rows(src, tgt),
                                               ExtensionPolicy::ExplicitTotal, "phi");
      std::string a = emit_report(certificate_json(classify(phi)));
      std::string b = emit_report(certificate_json(classify(phi)));
      auto r4 = worked_classical_four();
      Correspondence id = identity_map(r4);
      ComparisonVerdict v = related(id, id, ComparisonKind::ThetaLu);
      std::string c = emit_report(verdict_json(v));
      std::string d = emit_report(verdict_json(v));
      if (a != b || c != d) return fail("two runs", "serializations differ");
      if (a.find("\"version\"") == std::string::npos)
        return fail("certificate report", "missing version field");
      return pass("certificate and verdict reports, two runs each");
    }});

    return r;
  }();
  return claims;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

ClaimResult run_claim(const std::string& id, const VerifyOptions& options) {
  for (const auto& c : registry()) {
    if (c.id != id) continue;
    Outcome o = c.run(options);
    ClaimResult res;
    res.id = c.id;
    res.statement = c.statement;
    res.scope = o.scope;
    res.status = o.status;
    res.expected = c.expected;
    res.ok = o.status == c.expected;
    res.detail = o.detail;
    return res;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

std::vector<ClaimResult> run_all_claims(const VerifyOptions& options) {
  std::vector<ClaimResult> out;
  for (const auto& c : registry()) out.push_back(run_claim(c.id, options));
  return out;
}

}  // namespace rys
