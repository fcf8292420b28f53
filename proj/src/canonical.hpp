#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace realgw::detail {

// Minimum of serialize(pos) over all vertex numberings pos that list the
// vertices by increasing color.  Only vertices of equal color are permuted.
template <class Serialize>
std::string min_over_class_permutations(const std::vector<int>& colors, Serialize serialize) {
  int n = static_cast<int>(colors.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colors[order[j]] == colors[order[i]]) ++j;
    classes.push_back({i, j});
    i = j;
  }
  std::vector<int> pos(n);
  std::string best;
  bool have = false;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      std::string s = serialize(pos);
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
      return;
    }
    auto [b, e] = classes[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

}  // namespace realgw::detail
