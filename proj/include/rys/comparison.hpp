#pragma once

// Comparison relations between correspondences: the six "eventually
// sandwiched above a witness" relations, mu-classes of morphisms with their
// checked partial operations and quasi-order, the filter-agreement check for
// self-maps, and the pointwise lattice operations on sandwiched smooth maps.

#include <optional>
#include <string>
#include <vector>

#include "rys/correspondence.hpp"

namespace rys {

enum class ComparisonKind { ThetaLu, ThetaUu, OmegaL, OmegaU, OL, OU };

std::string to_string(ComparisonKind kind);
ComparisonKind comparison_kind_from_string(const std::string& s);

// A verdict witness: the base point z0 (an element of X_c, the carrier minus
// coatoms and bounds) plus the approximation index (pair for ThetaUu).
struct ComparisonWitness {
  Subset z0;
  std::size_t i = 0;
  std::optional<std::size_t> j;
};

struct ComparisonVerdict {
  ComparisonKind kind = ComparisonKind::ThetaLu;
  bool holds = false;
  std::optional<ComparisonWitness> witness;
  std::optional<bool> symmetric;
  std::string reason;
};

// Is f kind-related to h?  Searches z0 over X_c in carrier order, then
// approximation indices in declaration order; the first witness wins, so
// verdicts are deterministic.  f and h must share source and target.
ComparisonVerdict related(const Correspondence& f, const Correspondence& h,
                          ComparisonKind kind);

// Re-checks a witness from scratch: every z above z0 (source parthood) must
// satisfy the kind's defining inclusions in the target.
bool check_witness(const Correspondence& f, const Correspondence& h, ComparisonKind kind,
                   const ComparisonWitness& witness);

// f and h each ThetaLu-related to the other.
bool symmetric_theta(const Correspondence& f, const Correspondence& h);

// mu-classes: the ThetaLu neighbours of a morphism h that are themselves
// morphisms (all operations here are total, so the closed flavor filters by
// the same predicate; it is kept for reporting).
enum class MuFlavor { Morphisms, ClosedMorphisms };

struct MuClass {
  Correspondence base;
  std::vector<Correspondence> members;
  MuFlavor flavor = MuFlavor::Morphisms;
};

MuClass mu_class(const Correspondence& h, MuFlavor flavor,
                 const std::vector<Correspondence>& pool);

// The class operations construct the candidate map and verify membership;
// a result outside the class is undefined rather than an error.
struct MuOpResult {
  std::optional<Correspondence> value;
  std::string note;
};

MuOpResult mu_plus(const MuClass& cls, const Correspondence& f, const Correspondence& g);
MuOpResult mu_cdot(const MuClass& cls, const Correspondence& f, const Correspondence& g);
// The constant-to-top map; its membership is checked, not assumed.
MuOpResult mu_iota(const MuClass& cls);

// The pointwise quasi-order on a mu-class and its quotient by mutual
// comparability.  quotient_leq is indexed by quotient class.
struct ClassOrder {
  std::vector<std::vector<bool>> leq;
  std::vector<std::size_t> member_class;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<bool>> quotient_leq;
  bool quotient_antisymmetric = true;
};

ClassOrder class_order(const MuClass& cls);

// Agreement of a sandwiched pair of self-maps on the definite elements above
// the witness.  The filter is the principal up-set of z0; hypothesis flags
// for the two maps are reported, a bad witness is an error.
struct FilterAgreement {
  Subset z0;
  std::size_t approx_index = 0;
  bool f_smooth_morphism = false;  // f in SM_s
  bool g_subnatural = false;       // g in SNC
  std::vector<Subset> filter;      // z0-up within the carrier
  std::vector<Subset> checked;     // definite elements inside the filter
  bool agree = true;
  std::vector<std::string> mismatches;
};

FilterAgreement filter_agreement(const Correspondence& f, const Correspondence& g,
                                 const Subset& z0);

// Pointwise lattice operations g|h, g&h, g^L, g^U over the members of
// pool that lie in Theta_lu(f) and the smooth (or plain) morphism family.
// The sandwich for a binary result is first tried at the join of the two
// members' witnesses, as in the underlying proof; a fallback search is
// reported when that join leaves X_c or fails.
struct LatticeOpEntry {
  std::string op;
  std::size_t g = 0;
  std::size_t h = 0;  // == g for unary entries
  bool sandwiched = false;
  bool family_member = false;
  bool joint_witness_used = false;
  std::string note;
};

struct LatticeOpReport {
  std::vector<std::size_t> member_indices;  // indices into the input pool
  std::vector<LatticeOpEntry> entries;
  bool all_sandwiched = true;
  bool all_family_members = true;
};

LatticeOpReport lattice_pointwise_ops(const Correspondence& f,
                                      const std::vector<Correspondence>& pool,
                                      bool require_smooth = true);

}  // namespace rys
