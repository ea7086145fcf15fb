#include "rtlab/geometry/prime_field.hpp"

#include <string>

#include "rtlab/error.hpp"

namespace rtlab::geometry {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

PrimeField::PrimeField(int q) : q_(q) {
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
    throw Error(ErrorCode::not_prime, std::to_string(q) + " is not prime");
}

int PrimeField::pow(int a, std::uint64_t e) const noexcept {
  std::int64_t result = 1;
  std::int64_t base = reduce(a);
  while (e > 0) {
    if (e & 1U) result = result * base % q_;
    base = base * base % q_;
    e >>= 1U;
  }
  return static_cast<int>(result);
}

int PrimeField::inv(int a) const {
  if (reduce(a) == 0) throw Error(ErrorCode::bad_param, "zero has no inverse");
  return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

}  // namespace rtlab::geometry
