#include "rys/rys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rys {

std::string to_string(AxiomCondition c) {
  switch (c) {
    case AxiomCondition::GranulesLuDefinite: return "granules-lu-definite";
    case AxiomCondition::LowerUnionOfContained: return "lower-union-of-contained";
    case AxiomCondition::GranulesCoverUniverse: return "granules-cover-universe";
    case AxiomCondition::ApproxUnionOfGranules: return "approx-union-of-granules";
    case AxiomCondition::UpperUnionOfMeeting: return "upper-union-of-meeting";
    case AxiomCondition::GranulesDisjointOrEqual: return "granules-disjoint-or-equal";
    case AxiomCondition::GranulesNonEmpty: return "granules-non-empty";
    case AxiomCondition::Hold: return "hold";
  }
  return "hold";
}

AxiomCondition axiom_condition_from_string(const std::string& s) {
  if (s == "granules-lu-definite") return AxiomCondition::GranulesLuDefinite;
  if (s == "lower-union-of-contained") return AxiomCondition::LowerUnionOfContained;
  if (s == "granules-cover-universe") return AxiomCondition::GranulesCoverUniverse;
  if (s == "approx-union-of-granules") return AxiomCondition::ApproxUnionOfGranules;
  if (s == "upper-union-of-meeting") return AxiomCondition::UpperUnionOfMeeting;
  if (s == "granules-disjoint-or-equal") return AxiomCondition::GranulesDisjointOrEqual;
  if (s == "granules-non-empty") return AxiomCondition::GranulesNonEmpty;
  if (s == "hold") return AxiomCondition::Hold;
  throw std::invalid_argument("unknown axiom condition: " + s);
}

AxiomCatalog AxiomCatalog::standard() {
  AxiomCatalog cat;
  cat.entries = {
      {"WRA", AxiomCondition::GranulesLuDefinite, true, false},
      {"LFU", AxiomCondition::LowerUnionOfContained, true, false},
      {"LS", AxiomCondition::GranulesCoverUniverse, true, false},
      {"RA", AxiomCondition::ApproxUnionOfGranules, true, false},
      // The remaining named axioms have no checkable body here; they ship as
      // placeholders that hold by definition until a configuration points
      // them at a concrete condition.
      {"ACG", AxiomCondition::Hold, true, true},
      {"MER", AxiomCondition::Hold, true, true},
      {"FU", AxiomCondition::Hold, true, true},
      {"NO", AxiomCondition::Hold, true, true},
      {"PS", AxiomCondition::Hold, true, true},
      {"ST", AxiomCondition::Hold, true, true},
      {"I", AxiomCondition::Hold, true, true},
  };
  return cat;
}

const AxiomEntry* AxiomCatalog::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> AxiomCatalog::enabled_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.enabled) out.push_back(e.name);
  return out;
}

std::size_t Rys::carrier_index(const Subset& s) const {
  // Carrier is the powerset in mask order, so the mask is the index.
  if (!(s.universe() == universe || s.universe()->same_elements(*universe)))
    throw std::invalid_argument("subset not over this system's universe");
  return static_cast<std::size_t>(s.mask());
}

namespace {

std::vector<Subset> powerset_carrier(const UniversePtr& u) {
  if (u->size() > 12)
    throw std::invalid_argument("universe too large for a powerset carrier (max 12)");
  std::vector<Subset> carrier;
  carrier.reserve(std::size_t{1} << u->size());
  for (std::uint64_t m = 0;; ++m) {
    carrier.emplace_back(u, m);
    if (m == u->full_mask()) break;
  }
  return carrier;
}

RysPtr build_common(UniversePtr u, Granulation gran, AxiomCatalog catalog, std::string desc) {
  Rys sys{u,
          powerset_carrier(u),
          [](const Subset& a, const Subset& b) { return a.subset_of(b); },
          {},
          [](const Subset& a, const Subset& b) { return a.set_union(b); },
          [](const Subset& a, const Subset& b) { return a.set_intersection(b); },
          UnaryOp([](const Subset& a) { return a.complement(); }),
          Subset::full_set(u),
          Subset::empty_set(u),
          std::move(gran),
          std::move(catalog),
          std::move(desc)};
  Granulation g = sys.granulation;
  sys.approx.push_back({[g](const Subset& a) { return lower_approx(g, a); },
                        [g](const Subset& a) { return upper_approx(g, a); },
                        "union-of-granules-contained", "union-of-granules-meeting"});
  return std::make_shared<const Rys>(std::move(sys));
}

}  // namespace

RysPtr build_classical_rys(const ApproximationSpace& space, AxiomCatalog catalog) {
  if (space.relation.kind() != RelationKind::Equivalence)
    throw std::invalid_argument("classical RYS requires an equivalence relation");
  return build_common(space.universe, granulation_from_relation(space.relation),
                      std::move(catalog), "classical");
}

RysPtr build_tolerance_rys(const ApproximationSpace& space, GranulationStyle style,
                           AxiomCatalog catalog) {
  if (!(space.relation.is_reflexive() && space.relation.is_symmetric()))
    throw std::invalid_argument("tolerance RYS requires a tolerance relation");
  if (style == GranulationStyle::Block)
    return build_common(space.universe, block_granulation(space.relation), std::move(catalog),
                        "tolerance-block");
  if (style == GranulationStyle::SuccessorNeighborhood)
    return build_common(space.universe, granulation_from_relation(space.relation),
                        std::move(catalog), "tolerance-neighborhood");
  throw std::invalid_argument("unsupported granulation style for a tolerance RYS");
}

RysPtr build_granular_rys(UniversePtr universe, Granulation granulation, AxiomCatalog catalog) {
  return build_common(std::move(universe), std::move(granulation), std::move(catalog),
                      "granular");
}

AtomStructure atom_structure(const Rys& rys) {
  const std::size_t n = rys.carrier.size();
  // Antisymmetry is checked, not assumed.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rys.part_of(a, b) && rys.part_of(b, a))
        throw std::invalid_argument("parthood is not antisymmetric on the carrier");

  std::optional<std::size_t> bottom;
  if (rys.bottom) bottom = rys.carrier_index(*rys.bottom);
  const std::size_t top = rys.carrier_index(rys.top);

  auto strictly_below = [&](std::size_t a, std::size_t b) {
    return a != b && rys.part_of(a, b);
  };
  auto is_bottom = [&](std::size_t a) { return bottom && a == *bottom; };

  AtomStructure out;
  std::vector<bool> atom(n, false), coatom(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    // Atom: non-bottom with nothing but the bottom strictly below it.
    if (!is_bottom(a)) {
      atom[a] = true;
      for (std::size_t b = 0; b < n && atom[a]; ++b)
        if (!is_bottom(b) && strictly_below(b, a)) atom[a] = false;
    }
    // Coatom: non-top with nothing but the top strictly above it.
    if (a != top) {
      coatom[a] = true;
      for (std::size_t b = 0; b < n && coatom[a]; ++b)
        if (b != top && strictly_below(a, b)) coatom[a] = false;
    }
    if (atom[a]) out.atoms.push_back(a);
    if (coatom[a]) out.coatoms.push_back(a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (is_bottom(a) || a == top) continue;
    if (!atom[a]) out.x_a.push_back(a);
    if (!coatom[a]) out.x_c.push_back(a);
    if (!atom[a] && !coatom[a]) out.x_ac.push_back(a);
  }
  return out;
}

namespace {

bool union_of_granules(const Rys& rys, const Subset& s) {
  Subset acc = Subset::empty_set(rys.universe);
  for (const auto& g : rys.granulation.granules())
    if (g.members.subset_of(s)) acc = acc.set_union(g.members);
  return acc == s;
}

AxiomCheck evaluate_condition(const Rys& rys, const AxiomEntry& entry) {
  AxiomCheck out{entry.name, true, entry.placeholder, ""};
  const auto& granules = rys.granulation.granules();
  switch (entry.body) {
    case AxiomCondition::GranulesLuDefinite: {
      for (const auto& g : granules) {
        bool definite = false;
        for (const auto& ap : rys.approx)
          if (ap.lower(g.members) == g.members && ap.upper(g.members) == g.members) {
            definite = true;
            break;
          }
        if (!definite) {
          out.holds = false;
          out.detail = "granule " + g.name + " is not lu-definite for any pair";
          return out;
        }
      }
      out.detail = "every granule is lu-definite for some pair";
      return out;
    }
    case AxiomCondition::LowerUnionOfContained: {
      for (const auto& a : rys.carrier)
        for (std::size_t i = 0; i < rys.approx.size(); ++i) {
          Subset expect = Subset::empty_set(rys.universe);
          for (const auto& g : granules)
            if (g.members.subset_of(a)) expect = expect.set_union(g.members);
          if (rys.approx[i].lower(a) != expect) {
            out.holds = false;
            out.detail = "l_" + std::to_string(i) + "(" + a.to_string() +
                         ") is not the union of contained granules";
            return out;
          }
        }
      out.detail = "all lower approximations are unions of contained granules";
      return out;
    }
    case AxiomCondition::GranulesCoverUniverse: {
      out.holds = rys.granulation.covers_universe();
      out.detail = out.holds ? "granules cover the universe" : "granules do not cover";
      return out;
    }
    case AxiomCondition::ApproxUnionOfGranules: {
      for (const auto& a : rys.carrier)
        for (std::size_t i = 0; i < rys.approx.size(); ++i) {
          if (!union_of_granules(rys, rys.approx[i].lower(a))) {
            out.holds = false;
            out.detail = "l_" + std::to_string(i) + "(" + a.to_string() +
                         ") is not a union of granules";
            return out;
          }
          if (!union_of_granules(rys, rys.approx[i].upper(a))) {
            out.holds = false;
            out.detail = "u_" + std::to_string(i) + "(" + a.to_string() +
                         ") is not a union of granules";
            return out;
          }
        }
      out.detail = "every approximation is a union of granules";
      return out;
    }
    case AxiomCondition::UpperUnionOfMeeting: {
      for (const auto& a : rys.carrier)
        for (std::size_t i = 0; i < rys.approx.size(); ++i) {
          Subset expect = Subset::empty_set(rys.universe);
          for (const auto& g : granules)
            if (g.members.meets(a)) expect = expect.set_union(g.members);
          if (rys.approx[i].upper(a) != expect) {
            out.holds = false;
            out.detail = "u_" + std::to_string(i) + "(" + a.to_string() +
                         ") is not the union of meeting granules";
            return out;
          }
        }
      out.detail = "all upper approximations are unions of meeting granules";
      return out;
    }
    case AxiomCondition::GranulesDisjointOrEqual: {
      for (std::size_t i = 0; i < granules.size(); ++i)
        for (std::size_t j = i + 1; j < granules.size(); ++j) {
          const auto& a = granules[i].members;
          const auto& b = granules[j].members;
          if (a.meets(b) && a != b) {
            out.holds = false;
            out.detail = "granules " + granules[i].name + " and " + granules[j].name +
                         " partially overlap";
            return out;
          }
        }
      out.detail = "distinct granules never partially overlap";
      return out;
    }
    case AxiomCondition::GranulesNonEmpty: {
      for (const auto& g : granules)
        if (g.members.empty()) {
          out.holds = false;
          out.detail = "granule " + g.name + " is empty";
          return out;
        }
      out.detail = "no empty granule";
      return out;
    }
    case AxiomCondition::Hold:
      out.detail = "placeholder body: holds by definition";
      return out;
  }
  return out;
}

}  // namespace

AxiomCheck check_axiom(const Rys& rys, const std::string& name) {
  const AxiomEntry* entry = rys.catalog.find(name);
  if (!entry) throw std::invalid_argument("axiom not in catalog: " + name);
  return evaluate_condition(rys, *entry);
}

std::vector<AxiomCheck> check_all_axioms(const Rys& rys) {
  std::vector<AxiomCheck> out;
  for (const auto& e : rys.catalog.entries)
    if (e.enabled) out.push_back(evaluate_condition(rys, e));
  return out;
}

bool admissible(const Rys& rys) {
  for (const char* name : {"WRA", "LFU", "LS"}) {
    const AxiomEntry* entry = rys.catalog.find(name);
    if (!entry)
      throw std::invalid_argument(std::string("admissibility needs catalog axiom ") + name);
    if (!evaluate_condition(rys, *entry).holds) return false;
  }
  return true;
}

std::vector<std::string> satisfied_axioms(const Rys& rys) {
  std::vector<std::string> out;
  for (const auto& check : check_all_axioms(rys))
    if (check.holds) out.push_back(check.axiom);
  return out;
}

std::string to_string(EvolutionLabel label) {
  switch (label) {
    case EvolutionLabel::Sse: return "SSE";
    case EvolutionLabel::Similar: return "similar";
    case EvolutionLabel::SubSimilar: return "sub-similar";
    case EvolutionLabel::Psubmilar: return "psubmilar";
    case EvolutionLabel::PseudoSimilar: return "pseudo-similar";
    case EvolutionLabel::None: return "none";
  }
  return "none";
}

EvolutionReport classify_evolution(const Rys& x, const Rys& y) {
  auto ex = x.catalog.enabled_names();
  auto ey = y.catalog.enabled_names();
  if (std::set<std::string>(ex.begin(), ex.end()) != std::set<std::string>(ey.begin(), ey.end()))
    throw std::invalid_argument("evolution comparison needs identical enabled axiom sets");

  EvolutionReport rep;
  rep.axioms_x = satisfied_axioms(x);
  rep.axioms_y = satisfied_axioms(y);
  std::set<std::string> sx(rep.axioms_x.begin(), rep.axioms_x.end());
  std::set<std::string> sy(rep.axioms_y.begin(), rep.axioms_y.end());
  rep.axiom_inclusion = std::includes(sy.begin(), sy.end(), sx.begin(), sx.end());
  rep.both_admissible = admissible(x) && admissible(y);
  rep.equi_representable = x.approx.size() == y.approx.size();
  if (rep.equi_representable)
    for (std::size_t i = 0; i < x.approx.size(); ++i)
      if (x.approx[i].lower_tag != y.approx[i].lower_tag ||
          x.approx[i].upper_tag != y.approx[i].upper_tag)
        rep.equi_representable = false;

  const bool c1 = rep.axiom_inclusion, c2 = rep.both_admissible, c3 = rep.equi_representable;
  if (c1 && c2 && c3)
    rep.label = EvolutionLabel::Sse;
  else if (c1 && c2)
    rep.label = EvolutionLabel::Similar;
  else if (c1 && c3)
    rep.label = EvolutionLabel::SubSimilar;
  else if (c1)
    rep.label = EvolutionLabel::Psubmilar;
  else if (c2 && c3)
    rep.label = EvolutionLabel::PseudoSimilar;
  else
    rep.label = EvolutionLabel::None;
  return rep;
}

}  // namespace rys
