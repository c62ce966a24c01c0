#include "rys/posets.hpp"

#include <stdexcept>

namespace rys {

std::vector<std::vector<bool>> enumerate_up_sets(std::size_t n, const LeqFn& leq,
                                                 std::size_t limit) {
  // Topological order with strict successors first, so that when an element
  // is decided everything above it already is.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    bool progressed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < n && ready; ++j)
        if (!placed[j] && i != j && leq(i, j) && !leq(j, i)) ready = false;
      if (ready) {
        order.push_back(i);
        placed[i] = true;
        progressed = true;
      }
    }
    if (!progressed) throw std::invalid_argument("leq has a strict cycle");
  }

  constexpr std::size_t kSafetyCap = 5'000'000;
  std::vector<std::vector<bool>> out;
  std::vector<bool> current(n, false);
  std::vector<int> decided(n, -1);  // -1 undecided, 0 out, 1 in

  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    if (limit != 0 && out.size() >= limit) return;
    if (depth == n) {
      if (out.size() >= kSafetyCap) throw std::runtime_error("too many up-sets");
      out.push_back(current);
      return;
    }
    const std::size_t e = order[depth];
    // Exclude branch: admissible unless an equivalent element (mutual leq)
    // decided earlier is already in — strictly-below elements come later.
    bool exclude_ok = true;
    for (std::size_t d = 0; d < depth && exclude_ok; ++d) {
      const std::size_t below = order[d];
      if (leq(below, e) && decided[below] == 1) exclude_ok = false;
    }
    if (exclude_ok) {
      decided[e] = 0;
      dfs(depth + 1);
    }
    // Include branch: everything above e (already decided) must be in.
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const std::size_t above = order[d];
      if (leq(e, above) && decided[above] == 0) ok = false;
    }
    if (ok) {
      decided[e] = 1;
      current[e] = true;
      dfs(depth + 1);
      current[e] = false;
    }
    decided[e] = -1;
  };
  dfs(0);
  return out;
}

bool is_up_set(const std::vector<bool>& holds, const LeqFn& leq) {
  const std::size_t n = holds.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!holds[a]) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b) && !holds[b]) return false;
  }
  return true;
}

}  // namespace rys
