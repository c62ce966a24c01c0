#include "rys/subset.hpp"

#include <bit>
#include <sstream>

namespace rys {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("universe must have at least one element");
  if (names_.size() > 64) throw std::invalid_argument("universe too large (max 64 elements)");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("universe element name must be non-empty");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate universe element name: " + names_[i]);
  }
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown universe element: " + std::string(name));
  return *i;
}

Subset::Subset(UniversePtr universe, std::uint64_t mask)
    : universe_(std::move(universe)), mask_(mask) {
  if (!universe_) throw std::invalid_argument("subset requires a universe");
  if (mask_ & ~universe_->full_mask())
    throw std::invalid_argument("subset mask has bits outside the universe");
}

Subset Subset::full_set(UniversePtr universe) {
  auto mask = universe->full_mask();
  return Subset(std::move(universe), mask);
}

Subset Subset::singleton(UniversePtr universe, std::size_t element) {
  if (element >= universe->size()) throw std::invalid_argument("element index out of range");
  return Subset(std::move(universe), std::uint64_t{1} << element);
}

Subset Subset::of_names(UniversePtr universe, const std::vector<std::string>& names) {
  std::uint64_t mask = 0;
  for (const auto& n : names) mask |= std::uint64_t{1} << universe->index_of(n);
  return Subset(std::move(universe), mask);
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool Subset::compatible(const Subset& other) const {
  return universe_ == other.universe_ || universe_->same_elements(*other.universe_);
}

void Subset::require_compatible(const Subset& other) const {
  if (!compatible(other)) throw std::invalid_argument("subsets belong to different universes");
}

Subset Subset::set_union(const Subset& other) const {
  require_compatible(other);
  return Subset(universe_, mask_ | other.mask_);
}

Subset Subset::set_intersection(const Subset& other) const {
  require_compatible(other);
  return Subset(universe_, mask_ & other.mask_);
}

Subset Subset::set_difference(const Subset& other) const {
  require_compatible(other);
  return Subset(universe_, mask_ & ~other.mask_);
}

Subset Subset::complement() const { return Subset(universe_, universe_->full_mask() & ~mask_); }

bool Subset::subset_of(const Subset& other) const {
  require_compatible(other);
  return (mask_ & ~other.mask_) == 0;
}

bool Subset::meets(const Subset& other) const {
  require_compatible(other);
  return (mask_ & other.mask_) != 0;
}

std::vector<std::string> Subset::element_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < universe_->size(); ++i)
    if (contains(i)) out.push_back(universe_->name(i));
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (!contains(i)) continue;
    if (!first) os << ',';
    os << universe_->name(i);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace rys
