#include "rtlab/combinatorics.hpp"

namespace rtlab {

double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return result;
}

}  // namespace rtlab
