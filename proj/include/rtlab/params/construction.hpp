#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

namespace rtlab::params {

using Rational = boost::rational<std::int64_t>;

enum class Regime { small_delta, mid_delta, sqrt_n, manual };

std::string_view to_string(Regime regime);
// Accepts "small", "small-delta", "mid", "mid-delta", "sqrt", "sqrt-n", "manual".
Regime regime_from_string(std::string_view name);

struct ConstructionParams {
  Regime regime = Regime::manual;
  int r = 1;
  int s = 2;
  double delta = 0.0;
  double epsilon = 0.0;
  double n = 0.0;
  std::int64_t q = 0;
  double kappa = 0.0;
  double lambda = 0.0;
  double lambda_exponent = 0.0;  // log_q(lambda)
  double p = 0.0;
  double alpha = 0.0;
  int a = 0;
  int b = 0;
  std::vector<std::string> feasibility;  // violated asymptotic hypotheses

  bool has_flag(std::string_view flag) const;
};

nlohmann::json to_json(const ConstructionParams& params);

// Smallest prime >= ceil(x). Requires x >= 2 (smaller x yields 2).
std::int64_t next_prime_at_least(double x);

// Ceiling that treats values within 1e-9 of an integer as that integer.
long long ceil_tolerant(double x);

// 20 s log s
double kappa_for(int s);
// ceil((s + r) / C(a-1, 2)) + r
int b_for(int s, int r, int a);

// Upper end of the small-delta regime: 1/2 + 1/(2(2r+1)).
double small_delta_top(int r);

// lambda exponent 1 - 1/r + (2delta - 1)(2 + 1/r) - 10 r^2 / b.
double small_delta_lambda_exponent(int r, double delta, int b);
Rational small_delta_lambda_exponent(int r, Rational delta, std::int64_t b);

// a = 2 + max{ceil(1/delta), ceil((2r+1) + (delta(2r+1) - 1)/(1 - delta))}
int mid_delta_a(int r, double delta);
// E = ((1-d)(2r+1)b - 4(1-d)r^3 + r + 3) / ((d(2r+1) - 1)b - 4 d r^3)
double mid_delta_exponent(int r, double delta, std::int64_t b);
Rational mid_delta_exponent(int r, Rational delta, std::int64_t b);
// (1-d)(2r+1) / (d(2r+1) - 1), the b -> infinity limit of E.
double mid_delta_exponent_limit(int r, double delta);
Rational mid_delta_exponent_limit(int r, Rational delta);

// Throws Error(bad_range) when delta is outside [1/2, small_delta_top(r)].
// delta = 1/2 gives the sqrt-n variant (p = 1, alpha = 20 s log s sqrt(n)).
ConstructionParams derive_params_small_delta(int r, int s, double epsilon, double delta, double n);
ConstructionParams derive_params_sqrt(int r, int s, double epsilon, double n);
// Throws Error(bad_range) unless small_delta_top(r) < delta < 1, or when the
// exponent E leaves no usable prime (E + 1 <= 0 or q beyond 2^31).
ConstructionParams derive_params_mid_delta(int r, int s, double epsilon, double delta, double n);

struct ManualValues {
  int r = 1;
  int s = 2;
  double n = 0.0;
  std::int64_t q = 0;
  double lambda = 0.0;
  double p = 0.0;
  double alpha = 0.0;
  int a = 3;
  int b = 0;  // 0: derive from (s, r, a)
  double delta = 0.0;
  double epsilon = 0.0;
};

// Throws Error(not_prime) if q is not prime; everything else becomes a flag.
ConstructionParams manual_params(const ManualValues& values);

// Recomputes the flag list from the numeric fields.
std::vector<std::string> feasibility_flags(const ConstructionParams& params);

}  // namespace rtlab::params
