#pragma once

#include <cstdint>
#include <vector>

namespace rtlab {

// Identifies the kind of object a random decision belongs to. Values are part
// of the on-disk reproducibility contract; never renumber.
enum class StreamKind : std::uint64_t {
  line_keep = 1,
  point_keep = 2,
  line_color = 3,
  quadrangle_color = 4,
  drc = 5,
  alpha_probe = 6,
  extract = 7,
  harness = 8,
  test = 9,
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Counter-based generator: every draw is a pure function of
// (seed, kind, a, b), so decisions do not depend on enumeration order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, StreamKind kind) noexcept : seed_(seed), kind_(kind) {}

  std::uint64_t bits(std::uint64_t a, std::uint64_t b = 0) const noexcept;

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform(std::uint64_t a, std::uint64_t b = 0) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  StreamKind kind() const noexcept { return kind_; }

 private:
  std::uint64_t seed_;
  StreamKind kind_;
};

// Sequential stream on top of CounterRng. Integer draws use rejection
// sampling so results are identical on every platform.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, StreamKind kind, std::uint64_t stream = 0) noexcept
      : rng_(seed, kind), stream_(stream) {}

  std::uint64_t next_bits() noexcept { return rng_.bits(stream_, counter_++); }
  double uniform() noexcept { return rng_.uniform(stream_, counter_++); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  // k distinct values from [0, n) in sampling order (partial Fisher-Yates).
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  CounterRng rng_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// Derives an independent seed for a named substream, e.g. (q, seed, stage).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) noexcept;

}  // namespace rtlab
