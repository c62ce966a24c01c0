// Correspondences: total maps between two RYS carriers, their classification
// (proto-/pre-/sub-natural, smooth, morphisms), canonical case labels over
// partition and block granulations, representability of definite elements,
// the exact alpha/beta inclusion bounds, and pointwise algebra on families.
//
// Term existence is decided by closing the seed set inside the finite target
// carrier; the derivation recorded for each closure element doubles as the
// witnessing term.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rys/rys.hpp"

namespace rys {

struct Term {
  enum class Kind { Seed, Oplus, Odot, Complement };
  Kind kind = Kind::Seed;
  std::size_t seed = 0;  // index into the seed list when kind == Seed
  std::shared_ptr<const Term> left, right;

  std::string render(const std::vector<std::string>& seed_names) const;
};

// Which operations terms may use.  The default mirrors a target's signature:
// oplus and odot always, complement when the system defines one.
struct TermOps {
  bool use_oplus = true;
  bool use_odot = true;
  bool use_complement = false;
};

TermOps signature_ops(const Rys& target);

struct GeneratedElement {
  Subset value;
  Term term;
};

struct GeneratedSubalgebra {
  std::vector<GeneratedElement> elements;  // seeds first, then closure rounds
  std::vector<std::string> seed_names;

  bool contains(const Subset& s) const;
  const Term* term_for(const Subset& s) const;  // null when absent
  // Rendered witness term, or empty string when the value is not generated.
  std::string describe(const Subset& s) const;
};

// Least superset of `seeds` closed under the chosen target operations, with
// one witness derivation per element.  Seed names default to the seeds'
// set notation.
GeneratedSubalgebra generated_subalgebra(const Rys& target, const std::vector<Subset>& seeds,
                                         TermOps ops,
                                         std::vector<std::string> seed_names = {});

struct Correspondence {
  RysPtr source;
  RysPtr target;
  std::vector<std::size_t> table;  // source carrier index -> target carrier index
  std::string name;

  Subset image(const Subset& s) const;
  std::size_t image_index(std::size_t i) const { return table.at(i); }
};

// How a partial map table is completed to a total correspondence.
//   ExplicitTotal     every source carrier element listed exactly once
//   OplusExtension    images given on singletons; phi(S) joins them, with
//                     phi(empty) = target bottom
//   IdentityElsewhere unlisted elements map to themselves (same universe)
enum class ExtensionPolicy { ExplicitTotal, OplusExtension, IdentityElsewhere };

std::string to_string(ExtensionPolicy policy);
ExtensionPolicy extension_policy_from_string(const std::string& s);

Correspondence make_correspondence(RysPtr source, RysPtr target,
                                   const std::vector<std::pair<Subset, Subset>>& rows,
                                   ExtensionPolicy policy, std::string name = "");

// Target granules generated by phi({x}): granules whose recorded generator
// lies in phi({x}); partition targets use the classes meeting phi({x}).
std::vector<Granule> seeds_for(const Correspondence& c, std::size_t source_element);

struct MorphismWitness {
  std::size_t a = 0, b = 0;  // source carrier indices where preservation fails
  std::string detail;
};

struct ClassificationCertificate {
  bool injective = false;
  bool injective_on_granules = false;
  bool granule_images_term_representable = false;  // over all target granules
  bool seeds_singleton_generated = false;          // over seeds_for per granule
  bool is_pon = false;
  bool is_pnc = false;
  bool is_snc = false;
  bool is_oplus_morphism = false;
  bool is_odot_morphism = false;
  bool is_morphism = false;
  bool is_closed_morphism = false;  // equals is_morphism while operations are total
  bool smooth = false;
  std::optional<std::string> partition_case;  // first match among B1..B4
  std::optional<std::string> block_case;      // first match among C1..C8
  std::vector<std::string> partition_case_all;
  std::vector<std::string> block_case_all;
  // Granule name -> witness term (or a note explaining the failure).
  std::map<std::string, std::string> granule_witnesses;
  std::optional<MorphismWitness> oplus_witness;  // set when is_oplus_morphism is false
  std::optional<MorphismWitness> odot_witness;
};

ClassificationCertificate classify(const Correspondence& c);

// All granule images equal and landing on the target's bottom or top.
bool trivial_on_granules(const Correspondence& c);

// Case labels, checked in fixed order with first-match semantics; `all`
// receives every matching label.  partition_case needs partition
// granulations on both sides and an SNC; block_case needs a partition source
// and block target.  The labels needing a complement are skipped when the
// target has none.  block_case can read the inner singleton image as
// phi({y}) instead of the literal phi({x}) via `inner_y`.
std::optional<std::string> partition_case(const Correspondence& c,
                                          std::vector<std::string>* all = nullptr);
std::optional<std::string> block_case(const Correspondence& c, bool inner_y = false,
                                      std::vector<std::string>* all = nullptr);

struct ApproxInclusionReport {
  struct PerPair {
    bool lower_inclusion = false;  // phi(A^l) within (phi A)^l for all A
    bool upper_inclusion = false;
    bool equality = false;
    std::string detail;
  };
  std::vector<PerPair> pairs;  // one entry per target approximation pair
  bool hypothesis = false;     // SNC oplus-morphism matching the granule condition
  bool zero_one_preserving_morphism = false;
};

// Source must be classical, target a tolerance system (block or successor
// neighbourhood granulation).
ApproxInclusionReport approx_inclusion_report(const Correspondence& c);

struct RepresentabilityReport {
  struct Entry {
    Subset definite;
    Subset image;
    bool representable = false;       // over {oplus, odot}
    bool with_complement = false;     // over the full target signature
    bool pure_union = false;          // a plain join of target granules
    std::string term;                 // witness from the richest succeeding closure
  };
  std::vector<Entry> entries;
  bool ok = false;              // every image representable over {oplus, odot}
  bool ok_with_complement = false;
  bool pure_union_ok = false;
};

// Tests every lu-definite element of the classical source.
RepresentabilityReport definite_representability(const Correspondence& c);

struct AlphaBetaBounds {
  Ratio alpha{0};             // greatest alpha with alpha*k1(X,Y) <= k2(fX,fY)
  Ratio beta{0};              // least beta with k2(fX,fY) <= beta*k1(X,Y)
  bool beta_infinite = false;
  // Same bounds under the alternative reading whose right-hand side scales
  // the target measure applied to (X,Y); numerically identical here because
  // both measures use the one inclusion formula, but reported separately.
  Ratio alpha_alt{0};
  Ratio beta_alt{0};
  bool beta_alt_infinite = false;
  std::optional<std::pair<std::size_t, std::size_t>> alpha_witness;  // source indices
  std::optional<std::pair<std::size_t, std::size_t>> beta_witness;
};

// Requires a morphism between classical systems.
AlphaBetaBounds alpha_beta_bounds(const Correspondence& c);

// Correspondence families: proto-natural base plus the smooth / morphism
// refinements (POC, POC_s, POM, POM_s and the PNC/SNC analogues).
enum class FamilyBase { Poc, Pnc, Snc };

struct Family {
  FamilyBase base = FamilyBase::Poc;
  bool smooth = false;
  bool oplus_morphism = false;
};

std::string to_string(const Family& family);
bool in_family(const ClassificationCertificate& cert, const Family& family);
bool in_family(const Correspondence& c, const Family& family);

// Pointwise operations construct the candidate table and re-verify family
// membership; a result outside the family is "undefined", not an error.
struct PointwiseResult {
  std::optional<Correspondence> value;
  std::string note;
};

PointwiseResult pointwise_oplus(const Correspondence& f, const Correspondence& g,
                                const Family& family);
PointwiseResult pointwise_odot(const Correspondence& f, const Correspondence& g,
                               const Family& family);
PointwiseResult pointwise_complement(const Correspondence& f, const Family& family);
PointwiseResult pointwise_lower(const Correspondence& f, const Family& family,
                                std::size_t pair_index = 0);
PointwiseResult pointwise_upper(const Correspondence& f, const Family& family,
                                std::size_t pair_index = 0);

// f <= g in the pointwise target-parthood order.
bool pointwise_leq(const Correspondence& f, const Correspondence& g);

// Enumeration and sampling helpers for oracle-style exhaustive checks on
// tiny carriers.  Morphisms (union- and intersection-preserving maps) are
// generated from their structure: f(X) = T0 with pairwise singleton images
// overlapping exactly in T0; oplus-morphisms drop the disjointness demand.
// `limit` of 0 means unbounded.
std::vector<Correspondence> enumerate_morphisms(RysPtr source, RysPtr target,
                                                std::size_t limit = 0);
std::vector<Correspondence> enumerate_oplus_morphisms(RysPtr source, RysPtr target,
                                                      std::size_t limit = 0);
std::vector<Correspondence> enumerate_injective_maps(RysPtr source, RysPtr target,
                                                     std::size_t limit = 0);
std::vector<Correspondence> sample_correspondences(RysPtr source, RysPtr target,
                                                   std::size_t count, std::uint64_t seed);

}  // namespace rys
