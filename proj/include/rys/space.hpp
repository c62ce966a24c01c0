// Finite approximation spaces: relations, granulations and approximations.
//
// A space is a universe plus a binary relation whose declared kind
// (equivalence / tolerance / general) is checked, never assumed.  A
// granulation is a named family of subsets; the three built-in styles are the
// partition of an equivalence, the successor neighbourhoods n(x) = {y : x R y}
// of a tolerance, and the maximal-clique blocks of a tolerance.  Lower and
// upper approximations, definite elements and the exact rational inclusion
// measure k(X,Y) all work against an explicit granulation.

#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rys/subset.hpp"

namespace rys {

using Ratio = boost::rational<long long>;

enum class RelationKind { Equivalence, Tolerance, General };

std::string to_string(RelationKind kind);
RelationKind relation_kind_from_string(const std::string& s);

class Relation {
 public:
  // `pairs` are (row, column) index pairs over the universe.  The declared
  // kind is verified on construction and violations throw.
  Relation(UniversePtr universe, RelationKind kind,
           const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const UniversePtr& universe() const { return universe_; }
  RelationKind kind() const { return kind_; }

  bool related(std::size_t a, std::size_t b) const { return (rows_[a] >> b) & 1u; }
  // Successor neighbourhood n(a) = {b : a R b} as a subset.
  Subset successors(std::size_t a) const { return Subset(universe_, rows_[a]); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

 private:
  UniversePtr universe_;
  RelationKind kind_;
  std::vector<std::uint64_t> rows_;
};

// Closes `seed_pairs` under the properties demanded by `kind` (equivalence:
// reflexive-symmetric-transitive closure; tolerance: reflexive-symmetric
// closure; general: the pairs as given) and returns the checked relation.
Relation generate_relation(UniversePtr universe, RelationKind kind,
                           const std::vector<std::pair<std::size_t, std::size_t>>& seed_pairs);

struct ApproximationSpace {
  UniversePtr universe;
  Relation relation;
};

enum class GranulationStyle { Partition, SuccessorNeighborhood, Block, Custom };

std::string to_string(GranulationStyle style);

struct Granule {
  std::string name;
  Subset members;
  // Generating element for generator-indexed styles (partition classes record
  // their least member, successor neighbourhoods their defining point).
  std::optional<std::size_t> generator;
};

class Granulation {
 public:
  Granulation(UniversePtr universe, GranulationStyle style, std::vector<Granule> granules);

  const UniversePtr& universe() const { return universe_; }
  GranulationStyle style() const { return style_; }
  const std::vector<Granule>& granules() const { return granules_; }
  std::size_t size() const { return granules_.size(); }

  bool covers_universe() const;
  bool is_partition() const;

 private:
  UniversePtr universe_;
  GranulationStyle style_;
  std::vector<Granule> granules_;
};

// Builds the relation's natural granulation.  Equivalences yield the
// deduplicated partition into classes (least generator recorded, named
// "[x]"); tolerances yield one successor neighbourhood per element with
// duplicates kept as distinct named granules ("n(x)").  Requires a reflexive
// relation so every element lies in its own granule.
Granulation granulation_from_relation(const Relation& rel);

// Maximal cliques of a tolerance, listed deterministically (ascending by
// member mask), named "{x,y,...}".  These are the blocks of the tolerance.
Granulation block_granulation(const Relation& rel);
std::vector<Subset> maximal_cliques(const Relation& rel);

// Union of granules contained in / meeting `a`.
Subset lower_approx(const Granulation& g, const Subset& a);
Subset upper_approx(const Granulation& g, const Subset& a);

enum class DefiniteKind { Lower, Upper, Both };

// Fixed points of the chosen approximation(s): delta_l = {A : A^l = A},
// delta_u = {A : A^u = A}, delta_lu their intersection.  Enumerates the whole
// powerset, so the universe is capped at desk scale.
std::vector<Subset> definite_elements(const Granulation& g, DefiniteKind kind);

// Exact rough inclusion k(X,Y) = #(X cap Y) / #X, with k(empty, Y) = 1.
Ratio rough_inclusion_k(const Subset& x, const Subset& y);

// Granules of `g` containing the element (the beta operator on points).
std::vector<Granule> blocks_containing(const Granulation& g, std::size_t element);

}  // namespace rys
