#pragma once

#include <cstdint>

namespace rtlab::geometry {

// Deterministic trial division; inputs here are small (field orders, primes
// near sqrt(n)).
bool is_prime(std::uint64_t n) noexcept;

// Arithmetic modulo a prime. Elements are canonical integers in [0, q).
class PrimeField {
 public:
  // Throws Error(not_prime) unless q is prime.
  explicit PrimeField(int q);

  int modulus() const noexcept { return q_; }

  int reduce(std::int64_t x) const noexcept {
    auto r = static_cast<int>(x % q_);
    return r < 0 ? r + q_ : r;
  }
  int add(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) + b); }
  int sub(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) - b); }
  int mul(int a, int b) const noexcept { return reduce(static_cast<std::int64_t>(a) * b); }
  int neg(int a) const noexcept { return reduce(-static_cast<std::int64_t>(a)); }
  int pow(int a, std::uint64_t e) const noexcept;
  // Multiplicative inverse; a must be nonzero.
  int inv(int a) const;

 private:
  int q_;
};

}  // namespace rtlab::geometry
