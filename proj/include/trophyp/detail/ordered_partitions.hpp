#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace trophyp {

template <class F>
void for_each_ordered_set_partition(int n, F&& f) {
  // Restricted growth strings give set partitions; block orders are permuted.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::vector<int> order;
  auto emit = [&](int k) {
    order.resize(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    do {
      for (int i = 0; i < n; ++i) labels[i] = order[rgs[i]];
      f(static_cast<const std::vector<int>&>(labels));
    } while (std::next_permutation(order.begin(), order.end()));
  };
  if (n == 0) {
    f(static_cast<const std::vector<int>&>(labels));
    return;
  }
  std::vector<int> maxes(static_cast<std::size_t>(n), 0);
  for (;;) {
    emit(maxes[n - 1] + 1);
    int i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

}  // namespace trophyp
