#pragma once

// Small order-theoretic helpers over finite index sets.

#include <cstddef>
#include <functional>
#include <vector>

namespace rys {

using LeqFn = std::function<bool(std::size_t, std::size_t)>;

// All up-closed subsets of a finite partial order, as characteristic
// vectors over 0..n-1.  Elements are processed upper-first, so the include
// branch can be pruned locally and the enumeration touches exactly the
// up-sets.  `limit` of 0 means unbounded; a safety cap throws if more than
// five million sets would be produced.
std::vector<std::vector<bool>> enumerate_up_sets(std::size_t n, const LeqFn& leq,
                                                 std::size_t limit = 0);

bool is_up_set(const std::vector<bool>& holds, const LeqFn& leq);

}  // namespace rys
