#include "rys/space.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rys {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Equivalence: return "equivalence";
    case RelationKind::Tolerance: return "tolerance";
    case RelationKind::General: return "general";
  }
  return "general";
}

RelationKind relation_kind_from_string(const std::string& s) {
  if (s == "equivalence") return RelationKind::Equivalence;
  if (s == "tolerance") return RelationKind::Tolerance;
  if (s == "general") return RelationKind::General;
  throw std::invalid_argument("unknown relation kind: " + s);
}

Relation::Relation(UniversePtr universe, RelationKind kind,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : universe_(std::move(universe)), kind_(kind), rows_(universe_->size(), 0) {
  const std::size_t n = universe_->size();
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("relation pair index out of range");
    rows_[a] |= std::uint64_t{1} << b;
  }
  // Declared kinds are checked, not assumed.
  if (kind_ == RelationKind::Equivalence &&
      !(is_reflexive() && is_symmetric() && is_transitive()))
    throw std::invalid_argument("relation declared equivalence is not one");
  if (kind_ == RelationKind::Tolerance && !(is_reflexive() && is_symmetric()))
    throw std::invalid_argument("relation declared tolerance is not one");
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = universe_->size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (related(a, b)) out.emplace_back(a, b);
  return out;
}

bool Relation::is_reflexive() const {
  for (std::size_t a = 0; a < universe_->size(); ++a)
    if (!related(a, a)) return false;
  return true;
}

bool Relation::is_symmetric() const {
  const std::size_t n = universe_->size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (related(a, b) != related(b, a)) return false;
  return true;
}

bool Relation::is_transitive() const {
  const std::size_t n = universe_->size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!related(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (related(b, c) && !related(a, c)) return false;
    }
  return true;
}

Relation generate_relation(UniversePtr universe, RelationKind kind,
                           const std::vector<std::pair<std::size_t, std::size_t>>& seed_pairs) {
  const std::size_t n = universe->size();
  std::vector<std::uint64_t> rows(n, 0);
  for (auto [a, b] : seed_pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("relation pair index out of range");
    rows[a] |= std::uint64_t{1} << b;
  }
  if (kind != RelationKind::General) {
    // Reflexive-symmetric closure.
    for (std::size_t a = 0; a < n; ++a) rows[a] |= std::uint64_t{1} << a;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((rows[a] >> b) & 1u) rows[b] |= std::uint64_t{1} << a;
  }
  if (kind == RelationKind::Equivalence) {
    // Transitive closure (Warshall).
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if ((rows[a] >> k) & 1u) rows[a] |= rows[k];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((rows[a] >> b) & 1u) pairs.emplace_back(a, b);
  return Relation(std::move(universe), kind, pairs);
}

std::string to_string(GranulationStyle style) {
  switch (style) {
    case GranulationStyle::Partition: return "partition";
    case GranulationStyle::SuccessorNeighborhood: return "successor-neighborhood";
    case GranulationStyle::Block: return "block";
    case GranulationStyle::Custom: return "custom";
  }
  return "custom";
}

Granulation::Granulation(UniversePtr universe, GranulationStyle style,
                         std::vector<Granule> granules)
    : universe_(std::move(universe)), style_(style), granules_(std::move(granules)) {
  for (const auto& g : granules_) {
    if (!(g.members.universe() == universe_ ||
          g.members.universe()->same_elements(*universe_)))
      throw std::invalid_argument("granule universe mismatch");
    if (g.members.empty()) throw std::invalid_argument("granule " + g.name + " is empty");
    if (g.generator && !g.members.contains(*g.generator))
      throw std::invalid_argument("granule " + g.name + " does not contain its generator");
  }
  if (style_ == GranulationStyle::Partition && !is_partition())
    throw std::invalid_argument("granulation declared a partition is not one");
  if ((style_ == GranulationStyle::SuccessorNeighborhood || style_ == GranulationStyle::Block ||
       style_ == GranulationStyle::Partition) &&
      !covers_universe())
    throw std::invalid_argument("granulation does not cover the universe");
}

bool Granulation::covers_universe() const {
  std::uint64_t seen = 0;
  for (const auto& g : granules_) seen |= g.members.mask();
  return seen == universe_->full_mask();
}

bool Granulation::is_partition() const {
  std::uint64_t seen = 0;
  for (const auto& g : granules_) {
    if (seen & g.members.mask()) return false;
    seen |= g.members.mask();
  }
  return seen == universe_->full_mask();
}

Granulation granulation_from_relation(const Relation& rel) {
  if (!rel.is_reflexive())
    throw std::invalid_argument("granulation requires a reflexive relation");
  const auto& u = rel.universe();
  std::vector<Granule> granules;
  if (rel.kind() == RelationKind::Equivalence) {
    std::vector<bool> placed(u->size(), false);
    for (std::size_t x = 0; x < u->size(); ++x) {
      if (placed[x]) continue;
      Subset cls = rel.successors(x);
      for (std::size_t y = 0; y < u->size(); ++y)
        if (cls.contains(y)) placed[y] = true;
      granules.push_back({"[" + u->name(x) + "]", cls, x});
    }
    return Granulation(u, GranulationStyle::Partition, std::move(granules));
  }
  // Tolerances and reflexive general relations: one successor neighbourhood
  // per element, duplicates kept as distinct named granules.
  for (std::size_t x = 0; x < u->size(); ++x)
    granules.push_back({"n(" + u->name(x) + ")", rel.successors(x), x});
  return Granulation(u, GranulationStyle::SuccessorNeighborhood, std::move(granules));
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the candidate with the most neighbours in p.
  std::uint64_t px = p | x;
  std::size_t pivot = 64;
  int best = -1;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!((px >> v) & 1u)) continue;
    int deg = std::popcount(p & adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  std::uint64_t candidates = pivot < 64 ? p & ~adj[pivot] : p;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!((candidates >> v) & 1u)) continue;
    std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<Subset> maximal_cliques(const Relation& rel) {
  if (!(rel.is_reflexive() && rel.is_symmetric()))
    throw std::invalid_argument("blocks require a tolerance (reflexive symmetric) relation");
  const std::size_t n = rel.universe()->size();
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && rel.related(a, b)) adj[a] |= std::uint64_t{1} << b;
  std::vector<std::uint64_t> masks;
  bron_kerbosch(adj, 0, rel.universe()->full_mask(), 0, masks);
  std::sort(masks.begin(), masks.end());
  std::vector<Subset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(rel.universe(), m);
  return out;
}

Granulation block_granulation(const Relation& rel) {
  std::vector<Granule> granules;
  for (const auto& clique : maximal_cliques(rel))
    granules.push_back({clique.to_string(), clique, std::nullopt});
  return Granulation(rel.universe(), GranulationStyle::Block, std::move(granules));
}

Subset lower_approx(const Granulation& g, const Subset& a) {
  Subset acc = Subset::empty_set(g.universe());
  for (const auto& gr : g.granules())
    if (gr.members.subset_of(a)) acc = acc.set_union(gr.members);
  return acc;
}

Subset upper_approx(const Granulation& g, const Subset& a) {
  Subset acc = Subset::empty_set(g.universe());
  for (const auto& gr : g.granules())
    if (gr.members.meets(a)) acc = acc.set_union(gr.members);
  return acc;
}

std::vector<Subset> definite_elements(const Granulation& g, DefiniteKind kind) {
  const auto& u = g.universe();
  if (u->size() > 20) throw std::invalid_argument("universe too large for powerset sweep");
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m <= u->full_mask(); ++m) {
    Subset a(u, m);
    bool ok = true;
    if (kind == DefiniteKind::Lower || kind == DefiniteKind::Both)
      ok = ok && lower_approx(g, a) == a;
    if (kind == DefiniteKind::Upper || kind == DefiniteKind::Both)
      ok = ok && upper_approx(g, a) == a;
    if (ok) out.push_back(a);
    if (m == u->full_mask()) break;
  }
  return out;
}

Ratio rough_inclusion_k(const Subset& x, const Subset& y) {
  if (x.empty()) return Ratio(1);
  return Ratio(static_cast<long long>(x.set_intersection(y).count()),
               static_cast<long long>(x.count()));
}

std::vector<Granule> blocks_containing(const Granulation& g, std::size_t element) {
  if (element >= g.universe()->size())
    throw std::invalid_argument("element index out of range");
  std::vector<Granule> out;
  for (const auto& gr : g.granules())
    if (gr.members.contains(element)) out.push_back(gr);
  return out;
}

}  // namespace rys
