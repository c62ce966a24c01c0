// Named finite universes and bit-indexed subsets.
//
// Every structure in the workbench lives over a small named universe.  A
// Subset is a canonical bit mask over the universe's element order, so set
// algebra is cheap and equality is extensional.  Universes are immutable and
// shared; mixing subsets of different universes is a hard error.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rys {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

class Universe {
 public:
  // Element names must be non-empty and pairwise distinct; at least one
  // element and at most 64 (subsets are single-word bit masks).
  explicit Universe(std::vector<std::string> names);

  static UniversePtr make(std::vector<std::string> names) {
    return std::make_shared<const Universe>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Like find() but throws std::invalid_argument for unknown names.
  std::size_t index_of(std::string_view name) const;

  bool same_elements(const Universe& other) const { return names_ == other.names_; }

  // Mask with every element set.
  std::uint64_t full_mask() const {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

class Subset {
 public:
  Subset(UniversePtr universe, std::uint64_t mask);

  static Subset empty_set(UniversePtr universe) { return Subset(std::move(universe), 0); }
  static Subset full_set(UniversePtr universe);
  static Subset singleton(UniversePtr universe, std::size_t element);
  static Subset of_names(UniversePtr universe, const std::vector<std::string>& names);

  const UniversePtr& universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(std::size_t element) const { return (mask_ >> element) & 1u; }
  std::size_t count() const;
  bool empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == universe_->full_mask(); }

  Subset set_union(const Subset& other) const;
  Subset set_intersection(const Subset& other) const;
  Subset set_difference(const Subset& other) const;
  Subset complement() const;

  bool subset_of(const Subset& other) const;
  bool meets(const Subset& other) const;

  // Element names in universe order, handy for reports.
  std::vector<std::string> element_names() const;
  // Compact "{x1,x2}" rendering.
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.mask_ == b.mask_ && a.compatible(b);
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

 private:
  bool compatible(const Subset& other) const;
  void require_compatible(const Subset& other) const;

  UniversePtr universe_;
  std::uint64_t mask_;
};

}  // namespace rys
