#include "rtlab/rng.hpp"

#include <numeric>

namespace rtlab {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t h = splitmix64(seed_);
  h = splitmix64(h ^ static_cast<std::uint64_t>(kind_));
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b * kGolden));
  return h;
}

double CounterRng::uniform(std::uint64_t a, std::uint64_t b) const noexcept {
  return static_cast<double>(bits(a, b) >> 11) * 0x1.0p-53;
}

std::uint64_t StreamRng::below(std::uint64_t bound) noexcept {
  // Largest multiple of bound representable; values above it are rejected.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    std::uint64_t x = next_bits();
    if (x < limit) return x % bound;
  }
}

std::vector<int> StreamRng::sample_without_replacement(int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) noexcept {
  std::uint64_t h = splitmix64(seed ^ 0x5eedULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b * kGolden));
  h = splitmix64(h ^ (c * 0xd1b54a32d192ed03ULL));
  return h;
}

}  // namespace rtlab
