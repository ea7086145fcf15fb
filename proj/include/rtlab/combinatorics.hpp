#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rtlab {

// Calls f(subset) for every k-subset of items in lexicographic order of
// positions. Stops early and returns false if f returns false.
template <typename T, typename F>
bool for_each_combination(std::span<const T> items, std::size_t k, F&& f) {
  const std::size_t n = items.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!f(std::span<const T>(subset))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::int64_t n, std::int64_t k);

}  // namespace rtlab
