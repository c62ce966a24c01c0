// Rough Y-systems: a carrier with parthood, granule-derived approximation
// pairs, aggregation operations and a granular axiom catalog.
//
// In this workbench a carrier is always the full powerset of a universe in
// declaration order (mask 0, 1, 2, ...).  Parthood defaults to inclusion,
// oplus/odot to union/intersection, and each approximation pair carries a
// representation tag naming the granule term shape that defines it, which is
// what evolution classification compares.  The axiom catalog is data: entries
// map names to interpreter conditions and can be re-pointed or disabled.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rys/space.hpp"

namespace rys {

using UnaryOp = std::function<Subset(const Subset&)>;
using BinaryOp = std::function<Subset(const Subset&, const Subset&)>;
using ParthoodFn = std::function<bool(const Subset&, const Subset&)>;

struct ApproxPair {
  UnaryOp lower;
  UnaryOp upper;
  std::string lower_tag;  // representation identifier of the defining term
  std::string upper_tag;
};

// Interpreter conditions an axiom catalog entry can point at.  The first four
// back the standard WRA / LFU / LS / RA bodies; the rest are alternates a
// configuration may select.  `Hold` is the documented placeholder body for
// catalog names whose source gives no checkable content.
enum class AxiomCondition {
  GranulesLuDefinite,        // every granule is (l_i,u_i)-definite for some i
  LowerUnionOfContained,     // l_i(A) equals the union of granules inside A
  GranulesCoverUniverse,     // the granulation covers the universe
  ApproxUnionOfGranules,     // every l_i(A), u_i(A) is a union of granules
  UpperUnionOfMeeting,       // u_i(A) equals the union of granules meeting A
  GranulesDisjointOrEqual,   // distinct granules never partially overlap
  GranulesNonEmpty,          // no empty granule
  Hold,                      // placeholder: holds by definition
};

std::string to_string(AxiomCondition c);
AxiomCondition axiom_condition_from_string(const std::string& s);

struct AxiomEntry {
  std::string name;
  AxiomCondition body;
  bool enabled = true;
  bool placeholder = false;  // true when the body is a configured stand-in
};

struct AxiomCatalog {
  std::vector<AxiomEntry> entries;

  // WRA/LFU/LS/RA with real bodies plus the documented placeholders
  // ACG, MER, FU, NO, PS, ST, I (body = Hold until configured otherwise).
  static AxiomCatalog standard();

  const AxiomEntry* find(const std::string& name) const;
  std::vector<std::string> enabled_names() const;
};

struct Rys;
using RysPtr = std::shared_ptr<const Rys>;

struct Rys {
  UniversePtr universe;
  std::vector<Subset> carrier;  // powerset in mask order
  ParthoodFn parthood;          // default: inclusion
  std::vector<ApproxPair> approx;
  BinaryOp oplus;  // default: union
  BinaryOp odot;   // default: intersection
  std::optional<UnaryOp> complement_op;
  Subset top;
  std::optional<Subset> bottom;
  Granulation granulation;
  AxiomCatalog catalog;
  std::string description;

  std::size_t carrier_index(const Subset& s) const;  // throws if absent
  const Subset& element(std::size_t i) const { return carrier.at(i); }
  bool part_of(std::size_t a, std::size_t b) const { return parthood(carrier[a], carrier[b]); }
};

// Classical RYS over an equivalence: partition granulation, one (l,u) pair.
RysPtr build_classical_rys(const ApproximationSpace& space,
                           AxiomCatalog catalog = AxiomCatalog::standard());

// Tolerance RYS, either successor-neighbourhood or block granulation.
RysPtr build_tolerance_rys(const ApproximationSpace& space, GranulationStyle style,
                           AxiomCatalog catalog = AxiomCatalog::standard());

// Generic constructor for a granulation already in hand (used by loaders).
RysPtr build_granular_rys(UniversePtr universe, Granulation granulation,
                          AxiomCatalog catalog = AxiomCatalog::standard());

struct AtomStructure {
  std::vector<std::size_t> atoms;    // minimal non-bottom carrier elements
  std::vector<std::size_t> coatoms;  // maximal non-top carrier elements
  std::vector<std::size_t> x_a;      // carrier minus atoms minus bounds
  std::vector<std::size_t> x_c;      // carrier minus coatoms minus bounds
  std::vector<std::size_t> x_ac;     // carrier minus both minus bounds
};

// Computes atoms/coatoms under the system's parthood.  Throws if parthood is
// not antisymmetric on the carrier.
AtomStructure atom_structure(const Rys& rys);

struct AxiomCheck {
  std::string axiom;
  bool holds = false;
  bool placeholder = false;
  std::string detail;  // witness or counterexample description
};

AxiomCheck check_axiom(const Rys& rys, const std::string& name);
std::vector<AxiomCheck> check_all_axioms(const Rys& rys);

// Admissibility: WRA, LFU and LS all hold (the axioms an admissible granular
// operator set must satisfy).
bool admissible(const Rys& rys);

// Which enabled catalog axioms hold.
std::vector<std::string> satisfied_axioms(const Rys& rys);

enum class EvolutionLabel { Sse, Similar, SubSimilar, Psubmilar, PseudoSimilar, None };

std::string to_string(EvolutionLabel label);

struct EvolutionReport {
  bool axiom_inclusion = false;    // condition 1: axioms of X within axioms of Y
  bool both_admissible = false;    // condition 2
  bool equi_representable = false; // condition 3: operator counts and tags match
  EvolutionLabel label = EvolutionLabel::None;
  std::vector<std::string> axioms_x;
  std::vector<std::string> axioms_y;
};

// Classifies the evolution X -> Y.  Both systems must enable the same
// catalog axiom names; otherwise the comparison is meaningless and throws.
EvolutionReport classify_evolution(const Rys& x, const Rys& y);

}  // namespace rys
