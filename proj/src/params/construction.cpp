#include "rtlab/params/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rtlab/error.hpp"
#include "rtlab/geometry/prime_field.hpp"

namespace rtlab::params {

namespace {

constexpr double kTol = 1e-9;

void require_common(int r, int s, double n) {
  if (r < 1) throw Error(ErrorCode::bad_range, "r must be >= 1");
  if (s < 2) throw Error(ErrorCode::bad_range, "s must be >= 2");
  if (!(n >= 4.0) || !std::isfinite(n)) throw Error(ErrorCode::bad_range, "n must be a finite number >= 4");
}

std::int64_t binom2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::small_delta: return "small-delta";
    case Regime::mid_delta: return "mid-delta";
    case Regime::sqrt_n: return "sqrt-n";
    case Regime::manual: return "manual";
  }
  return "manual";
}

Regime regime_from_string(std::string_view name) {
  if (name == "small" || name == "small-delta") return Regime::small_delta;
  if (name == "mid" || name == "mid-delta") return Regime::mid_delta;
  if (name == "sqrt" || name == "sqrt-n") return Regime::sqrt_n;
  if (name == "manual") return Regime::manual;
  throw Error(ErrorCode::bad_param, "unknown regime '" + std::string(name) + "'");
}

bool ConstructionParams::has_flag(std::string_view flag) const {
  return std::find(feasibility.begin(), feasibility.end(), flag) != feasibility.end();
}

nlohmann::json to_json(const ConstructionParams& c) {
  return {{"regime", to_string(c.regime)},
          {"r", c.r},
          {"s", c.s},
          {"delta", c.delta},
          {"epsilon", c.epsilon},
          {"n", c.n},
          {"q", c.q},
          {"kappa", c.kappa},
          {"lambda", c.lambda},
          {"lambda_exponent", c.lambda_exponent},
          {"p", c.p},
          {"alpha", c.alpha},
          {"a", c.a},
          {"b", c.b},
          {"feasibility", c.feasibility}};
}

std::int64_t next_prime_at_least(double x) {
  auto c = static_cast<std::int64_t>(std::max(2.0, std::ceil(x - kTol * std::max(1.0, std::abs(x)))));
  while (!geometry::is_prime(static_cast<std::uint64_t>(c))) ++c;
  return c;
}

long long ceil_tolerant(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kTol * std::max(1.0, std::abs(x))) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

double kappa_for(int s) { return 20.0 * s * std::log(static_cast<double>(s)); }

int b_for(int s, int r, int a) {
  const std::int64_t c = binom2(a - 1);
  if (c <= 0) throw Error(ErrorCode::bad_range, "a must be >= 3");
  return static_cast<int>((s + r + c - 1) / c + r);
}

double small_delta_top(int r) { return 0.5 + 1.0 / (2.0 * (2 * r + 1)); }

double small_delta_lambda_exponent(int r, double delta, int b) {
  return 1.0 - 1.0 / r + (2.0 * delta - 1.0) * (2.0 + 1.0 / r) - 10.0 * r * r / static_cast<double>(b);
}

Rational small_delta_lambda_exponent(int r, Rational delta, std::int64_t b) {
  const Rational rr(r);
  return Rational(1) - Rational(1, r) + (Rational(2) * delta - 1) * (Rational(2) + Rational(1, r)) -
         Rational(10) * rr * rr / Rational(b);
}

int mid_delta_a(int r, double delta) {
  const double k = 2.0 * r + 1.0;
  const long long first = ceil_tolerant(1.0 / delta);
  const long long second = ceil_tolerant(k + (delta * k - 1.0) / (1.0 - delta));
  return static_cast<int>(2 + std::max(first, second));
}

double mid_delta_exponent(int r, double delta, std::int64_t b) {
  const double k = 2.0 * r + 1.0;
  const double r3 = static_cast<double>(r) * r * r;
  const auto bd = static_cast<double>(b);
  const double num = (1.0 - delta) * k * bd - 4.0 * (1.0 - delta) * r3 + r + 3.0;
  const double den = (delta * k - 1.0) * bd - 4.0 * delta * r3;
  return num / den;
}

Rational mid_delta_exponent(int r, Rational delta, std::int64_t b) {
  const Rational k(2 * r + 1);
  const Rational r3(static_cast<std::int64_t>(r) * r * r);
  const Rational bb(b);
  const Rational num = (Rational(1) - delta) * k * bb - Rational(4) * (Rational(1) - delta) * r3 + r + 3;
  const Rational den = (delta * k - 1) * bb - Rational(4) * delta * r3;
  if (den.numerator() == 0) throw Error(ErrorCode::bad_range, "exponent denominator vanishes");
  return num / den;
}

double mid_delta_exponent_limit(int r, double delta) {
  const double k = 2.0 * r + 1.0;
  return (1.0 - delta) * k / (delta * k - 1.0);
}

Rational mid_delta_exponent_limit(int r, Rational delta) {
  const Rational k(2 * r + 1);
  return (Rational(1) - delta) * k / (delta * k - 1);
}

std::vector<std::string> feasibility_flags(const ConstructionParams& c) {
  std::vector<std::string> flags;
  const double logq = std::log(static_cast<double>(c.q));
  if (c.p > 1.0 + kTol) flags.emplace_back("p > 1");
  if (c.lambda > static_cast<double>(c.q) * (1.0 + kTol)) flags.emplace_back("lambda > q");
  if (c.lambda <= logq) flags.emplace_back("lambda <= log q");
  if (c.lambda * c.p <= logq) flags.emplace_back("lambda*p <= log q");
  if (c.p > 0.0 && c.alpha < 10.0 * c.s * std::log(static_cast<double>(c.s)) * static_cast<double>(c.q) / c.p)
    flags.emplace_back("alpha < 10 s log s q / p");
  const double rr = static_cast<double>(c.r) * c.r;
  switch (c.regime) {
    case Regime::small_delta:
    case Regime::sqrt_n:
      if (c.epsilon <= 5.0 * rr / c.b) flags.emplace_back("epsilon <= 5r^2/b");
      if (c.regime == Regime::sqrt_n && c.r < 2) flags.emplace_back("r < 2");
      break;
    case Regime::mid_delta: {
      if (c.epsilon <= 104.0 * rr / c.b) flags.emplace_back("epsilon <= 104r^2/b");
      if (!(c.lambda_exponent > 0.0 && c.lambda_exponent < 1.0)) flags.emplace_back("E outside (0,1)");
      if (c.b < 20.0 * rr) flags.emplace_back("b < 20r^2");
      const double gap =
          std::min(1.0 - c.delta, ((2.0 * c.delta - 1.0) * (2.0 * c.r + 1.0) - 1.0) / (2.0 * c.r));
      if (52.0 * rr / c.b >= gap) flags.emplace_back("52r^2/b >= min(1-delta, ((2delta-1)(2r+1)-1)/(2r))");
      break;
    }
    case Regime::manual:
      break;
  }
  return flags;
}

ConstructionParams derive_params_small_delta(int r, int s, double epsilon, double delta, double n) {
  require_common(r, s, n);
  if (!(delta >= 0.5 - kTol) || delta > small_delta_top(r) + kTol)
    throw Error(ErrorCode::bad_range, "delta outside [1/2, 1/2 + 1/(2(2r+1))]");
  ConstructionParams c;
  c.regime = Regime::small_delta;
  c.r = r;
  c.s = s;
  c.delta = delta;
  c.epsilon = epsilon;
  c.n = n;
  c.q = next_prime_at_least(std::sqrt(n));
  c.kappa = kappa_for(s);
  c.a = 20 * r;
  c.b = b_for(s, r, c.a);
  const auto q = static_cast<double>(c.q);
  c.lambda_exponent = small_delta_lambda_exponent(r, delta, c.b);
  c.lambda = std::pow(q, c.lambda_exponent);
  if (std::abs(delta - 0.5) <= kTol) {
    c.regime = Regime::sqrt_n;
    c.p = 1.0;
    c.alpha = c.kappa * std::sqrt(n);
  } else {
    c.p = c.kappa * std::pow(q, -(2.0 * delta - 1.0));
    c.alpha = std::pow(n, delta);
  }
  c.feasibility = feasibility_flags(c);
  return c;
}

ConstructionParams derive_params_sqrt(int r, int s, double epsilon, double n) {
  return derive_params_small_delta(r, s, epsilon, 0.5, n);
}

ConstructionParams derive_params_mid_delta(int r, int s, double epsilon, double delta, double n) {
  require_common(r, s, n);
  if (!(delta > small_delta_top(r) + kTol) || !(delta < 1.0 - kTol))
    throw Error(ErrorCode::bad_range, "delta outside (1/2 + 1/(2(2r+1)), 1)");
  ConstructionParams c;
  c.regime = Regime::mid_delta;
  c.r = r;
  c.s = s;
  c.delta = delta;
  c.epsilon = epsilon;
  c.n = n;
  c.kappa = kappa_for(s);
  c.a = mid_delta_a(r, delta);
  c.b = b_for(s, r, c.a);
  const double e = mid_delta_exponent(r, delta, c.b);
  if (!std::isfinite(e) || e + 1.0 <= 0.0)
    throw Error(ErrorCode::bad_range, "lambda exponent " + std::to_string(e) + " leaves no prime order; increase s");
  const double target = std::pow(n, 1.0 / (e + 1.0));
  if (!(target < 2147483647.0)) throw Error(ErrorCode::bad_range, "prime order beyond 2^31; increase s");
  c.q = next_prime_at_least(target);
  const auto q = static_cast<double>(c.q);
  c.lambda_exponent = e;
  c.lambda = std::pow(q, e);
  c.p = c.kappa * std::pow(q, 1.0 - delta * (e + 1.0));
  c.alpha = std::pow(n, delta);
  c.feasibility = feasibility_flags(c);
  return c;
}

ConstructionParams manual_params(const ManualValues& v) {
  if (v.q < 2 || !geometry::is_prime(static_cast<std::uint64_t>(v.q)))
    throw Error(ErrorCode::not_prime, std::to_string(v.q) + " is not prime");
  if (v.r < 1 || v.s < 2) throw Error(ErrorCode::bad_range, "need r >= 1 and s >= 2");
  for (double x : {v.lambda, v.p, v.alpha, v.n, v.delta, v.epsilon})
    if (!std::isfinite(x)) throw Error(ErrorCode::bad_range, "manual parameters must be finite");
  ConstructionParams c;
  c.regime = Regime::manual;
  c.r = v.r;
  c.s = v.s;
  c.delta = v.delta;
  c.epsilon = v.epsilon;
  c.q = v.q;
  c.n = v.n > 0.0 ? v.n : static_cast<double>(v.q) * static_cast<double>(v.q);
  c.kappa = kappa_for(v.s);
  c.lambda = v.lambda;
  c.lambda_exponent = v.lambda > 0.0 ? std::log(v.lambda) / std::log(static_cast<double>(v.q)) : 0.0;
  c.p = v.p;
  c.alpha = v.alpha;
  c.a = v.a;
  c.b = v.b > 0 ? v.b : b_for(v.s, v.r, v.a);
  c.feasibility = feasibility_flags(c);
  return c;
}

}  // namespace rtlab::params
