#include "rtlab/params/bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "rtlab/error.hpp"

namespace rtlab::params {

namespace {

constexpr double kTol = 1e-9;

double need(const BoundInputs& in, const std::string& key) {
  const auto it = in.find(key);
  if (it == in.end()) throw Error(ErrorCode::bad_inputs, "missing input '" + key + "'");
  if (!std::isfinite(it->second)) throw Error(ErrorCode::bad_inputs, "input '" + key + "' is not finite");
  return it->second;
}

double need_positive(const BoundInputs& in, const std::string& key) {
  const double v = need(in, key);
  if (!(v > 0.0)) throw Error(ErrorCode::bad_inputs, "input '" + key + "' must be positive");
  return v;
}

int need_int(const BoundInputs& in, const std::string& key, int min_value) {
  const double v = need(in, key);
  if (v != std::floor(v) || v < min_value)
    throw Error(ErrorCode::bad_inputs, "input '" + key + "' must be an integer >= " + std::to_string(min_value));
  return static_cast<int>(v);
}

double need_n(const BoundInputs& in, double min_value = 1.0) {
  const double n = need(in, "n");
  if (!(n > min_value)) throw Error(ErrorCode::bad_inputs, "input 'n' must exceed " + std::to_string(min_value));
  return n;
}

double log_sum_exp(double x, double y) {
  const double m = std::max(x, y);
  if (!std::isfinite(m)) return m;
  return m + std::log(std::exp(x - m) + std::exp(y - m));
}

BoundReport from_log(const std::string& name, const BoundInputs& in, double log_value, std::string formula) {
  BoundReport r;
  r.name = name;
  r.inputs = in;
  r.log_value = log_value;
  r.value = std::exp(log_value);
  r.formula_ref = std::move(formula);
  return r;
}

BoundReport from_value(const std::string& name, const BoundInputs& in, double value, std::string formula) {
  BoundReport r;
  r.name = name;
  r.inputs = in;
  r.value = value;
  r.log_value = value > 0.0 ? std::log(value) : -std::numeric_limits<double>::infinity();
  r.formula_ref = std::move(formula);
  return r;
}

double log_g1_term1(double lambda, double q, double p, int a) {
  const double aa = static_cast<double>(a) * a;
  return (aa / 2.0) * std::log(lambda) + (aa - a) * std::log(p) - ((aa - 5.0 * a) / 2.0) * std::log(q);
}

double log_g1_term2(double lambda, double q, double p, int b, int r) {
  const double r3 = static_cast<double>(r) * r * r;
  return static_cast<double>(b) * r * std::log(lambda) + ((2.0 * r + 1.0) * b - 4.0 * r3) * std::log(p) -
         (static_cast<double>(b) * (r - 1) - 5.0 * r3) * std::log(q);
}

using Evaluator = std::function<BoundReport(const std::string&, const BoundInputs&)>;

const std::map<std::string, Evaluator>& registry() {
  static const std::map<std::string, Evaluator> table = {
      {"f_s_s1_lower",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in, std::exp(1.0));
         return from_value(name, in, std::sqrt(n * std::log(n) / std::log(std::log(n))),
                           "sqrt(n log n / log log n)");
       }},
      {"f_s_s1_upper",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in, std::exp(1.0));
         const int s = need_int(in, "s", 2);
         return from_log(name, in, 4.0 * s * s * std::log(std::log(n)) + 0.5 * std::log(n),
                         "(log n)^(4 s^2) sqrt(n)");
       }},
      {"f_2_3_lower",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in);
         return from_value(name, in, std::sqrt(n * std::log(n)) / std::sqrt(2.0), "(1/sqrt 2) sqrt(n log n)");
       }},
      {"f_2_3_upper",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in);
         return from_value(name, in, std::sqrt(2.0) * std::sqrt(n * std::log(n)), "sqrt 2 sqrt(n log n)");
       }},
      {"f_s_sr_lower",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in);
         const double eps = need(in, "epsilon");
         return from_log(name, in, (0.5 - eps) * std::log(n), "n^(1/2 - epsilon)");
       }},
      {"f_s_sr_upper",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in);
         return from_value(name, in, std::sqrt(n), "sqrt(n)");
       }},
      {"h1_type1",
       [](const std::string& name, const BoundInputs& in) {
         return from_log(name, in,
                         log_h1_type1_bound(need_positive(in, "lambda"), need_positive(in, "q"), need_int(in, "a", 1)),
                         "4 lambda^(a^2/2) / q^((a^2-5a)/2)");
       }},
      {"h1_type2",
       [](const std::string& name, const BoundInputs& in) {
         return from_log(name, in,
                         log_h1_type2_bound(need_positive(in, "lambda"), need_positive(in, "q"), need_int(in, "b", 1),
                                            need_int(in, "r", 1)),
                         "4 lambda^(b r) / q^(b(r-1) - 5r^3)");
       }},
      {"h2_type1",
       [](const std::string& name, const BoundInputs& in) {
         return from_log(name, in,
                         log_h2_type1_bound(need_positive(in, "lambda"), need_positive(in, "q"), need_int(in, "a", 1)),
                         "4 lambda^a q^a");
       }},
      {"h2_type2",
       [](const std::string& name, const BoundInputs& in) {
         return from_log(name, in,
                         log_h2_type2_bound(need_positive(in, "lambda"), need_positive(in, "q"), need_int(in, "b", 1),
                                            need_int(in, "r", 1)),
                         "4 lambda^b q^(r+2)");
       }},
      {"g1_cliques",
       [](const std::string& name, const BoundInputs& in) {
         const double lambda = need_positive(in, "lambda"), q = need_positive(in, "q"), p = need_positive(in, "p");
         const int a = need_int(in, "a", 1), b = need_int(in, "b", 1), r = need_int(in, "r", 1);
         const double t1 = log_g1_term1(lambda, q, p, a), t2 = log_g1_term2(lambda, q, p, b, r);
         auto rep = from_log(name, in, std::log(8.0) + log_sum_exp(t1, t2),
                             "8 (lambda^(a^2/2) p^(a^2-a) / q^((a^2-5a)/2) + "
                             "lambda^(b r) p^((2r+1)b - 4r^3) / q^(b(r-1) - 5r^3))");
         rep.extra = {{"log_type1_term", t1}, {"log_type2_term", t2}};
         return rep;
       }},
      {"g2_cliques",
       [](const std::string& name, const BoundInputs& in) {
         const double lambda = need_positive(in, "lambda"), q = need_positive(in, "q"), p = need_positive(in, "p");
         const int a = need_int(in, "a", 1), b = need_int(in, "b", 1), r = need_int(in, "r", 1);
         const double r3 = static_cast<double>(r) * r * r;
         const double t1 = a * std::log(lambda) + a * std::log(q) + (static_cast<double>(a) * a - a) * std::log(p);
         const double t2 =
             b * std::log(lambda) + (r + 2.0) * std::log(q) + ((2.0 * r + 1.0) * b - 4.0 * r3) * std::log(p);
         auto rep = from_log(name, in, std::log(8.0) + log_sum_exp(t1, t2),
                             "8 (lambda^a q^a p^(a^2-a) + lambda^b q^(r+2) p^((2r+1)b - 4r^3))");
         rep.extra = {{"log_type1_term", t1}, {"log_type2_term", t2}};
         return rep;
       }},
      {"ub_exponent",
       [](const std::string& name, const BoundInputs& in) {
         const int r = need_int(in, "r", 1);
         const double delta = need(in, "delta");
         if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::bad_inputs, "delta must lie in (0, 1)");
         auto rep = from_value(name, in, ub_exponent(r, delta),
                               "2 - (1-delta)^2/(r-delta) if (r-delta)/(1-delta) is an integer, "
                               "else 2 - (1-delta)^2/(r+1-2delta)");
         rep.extra = {{"ratio", (r - delta) / (1.0 - delta)}};
         return rep;
       }},
      {"lb_exponent",
       [](const std::string& name, const BoundInputs& in) {
         const int r = need_int(in, "r", 1);
         const double delta = need(in, "delta");
         const double eps = in.contains("epsilon") ? need(in, "epsilon") : 0.0;
         return from_value(name, in, lb_exponent(r, delta, eps), "2 - (1-delta)/r - epsilon");
       }},
      {"lb_target",
       [](const std::string& name, const BoundInputs& in) {
         const int r = need_int(in, "r", 1);
         const double delta = need(in, "delta");
         const double eps = in.contains("epsilon") ? need(in, "epsilon") : 0.0;
         const double n = need_n(in);
         return from_log(name, in, lb_exponent(r, delta, eps) * std::log(n), "n^(2 - (1-delta)/r - epsilon)");
       }},
      {"join_main_term",
       [](const std::string& name, const BoundInputs& in) {
         const int k = need_int(in, "k", 1);
         const double n = need(in, "n");
         return from_value(name, in, 0.5 * (1.0 - 1.0 / k) * n * n, "(1/2)(1 - 1/k) n^2");
       }},
      {"z_lower",
       [](const std::string& name, const BoundInputs& in) {
         const double n = need_n(in, std::exp(1.0));
         const int s = need_int(in, "s", 2);
         const double ss = static_cast<double>(s) * s;
         return from_log(name, in,
                         (2.0 - 2.0 / (s + 1.0)) * std::log(n) + std::log(std::log(n)) / (ss - 1.0),
                         "n^(2 - 2/(s+1)) (log n)^(1/(s^2-1))");
       }},
      {"quadrangle",
       [](const std::string& name, const BoundInputs& in) {
         const double p = need_positive(in, "p"), q = need_positive(in, "q");
         auto rep = from_value(name, in, p * p * p * q * q, "p^3 q^2 edges on (pq+1)(p+1) points, alpha scale pq");
         const double n = (p * q + 1.0) * (p + 1.0);
         rep.extra = {{"points", n},
                      {"lines", (p * q + 1.0) * (q + 1.0)},
                      {"alpha_scale", p * q},
                      {"delta", std::log(p * q) / std::log(n)}};
         if (in.contains("s")) rep.extra["alpha_s_bound"] = need(in, "s") * need(in, "s") * p * q;
         return rep;
       }},
      {"fraction_error",
       [](const std::string&, const BoundInputs& in) {
         return fraction_error_report(need(in, "x"), need(in, "y"), need(in, "ex"), need(in, "ey"));
       }},
  };
  return table;
}

}  // namespace

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  nlohmann::json j = {{"name", r.name},
                      {"inputs", inputs},
                      {"value", std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json(nullptr)},
                      {"log_value", std::isfinite(r.log_value) ? nlohmann::json(r.log_value) : nlohmann::json(nullptr)},
                      {"formula_ref", r.formula_ref}};
  if (!r.extra.is_null()) j["extra"] = r.extra;
  return j;
}

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : registry()) out.push_back(k);
    return out;
  }();
  return names;
}

BoundReport evaluate_bound(const std::string& name, const BoundInputs& inputs) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::unknown_bound, "unknown bound '" + name + "'");
  return it->second(name, inputs);
}

FractionCheck fraction_error_bound(double x, double y, double ex, double ey) {
  if (x == 0.0 || y == 0.0) throw Error(ErrorCode::bad_range, "x and y must be nonzero");
  if (std::abs(ex / x) > 0.5 || std::abs(ey / y) > 0.5)
    throw Error(ErrorCode::bad_range, "relative perturbations must be at most 1/2");
  FractionCheck c;
  c.bound = (std::abs(ex * y) + 3.0 * std::abs(ey * x)) / (y * y);
  c.deviation = std::abs((x + ex) / (y + ey) - x / y);
  c.holds = c.deviation <= c.bound * (1.0 + kTol) + 1e-300;
  return c;
}

BoundReport fraction_error_report(double x, double y, double ex, double ey) {
  const auto c = fraction_error_bound(x, y, ex, ey);
  auto rep = from_value("fraction_error", {{"x", x}, {"y", y}, {"ex", ex}, {"ey", ey}}, c.bound,
                        "|(x+ex)/(y+ey) - x/y| <= (|ex y| + 3|ey x|)/y^2");
  rep.extra = {{"deviation", c.deviation}, {"holds", c.holds}};
  return rep;
}

double ub_exponent(int r, double delta) {
  const double ratio = (r - delta) / (1.0 - delta);
  const double d2 = (1.0 - delta) * (1.0 - delta);
  if (std::abs(ratio - std::round(ratio)) <= kTol * std::max(1.0, std::abs(ratio))) return 2.0 - d2 / (r - delta);
  return 2.0 - d2 / (r + 1.0 - 2.0 * delta);
}

Rational ub_exponent(int r, Rational delta) {
  const Rational one(1);
  const Rational ratio = (Rational(r) - delta) / (one - delta);
  const Rational d2 = (one - delta) * (one - delta);
  if (ratio.denominator() == 1) return Rational(2) - d2 / (Rational(r) - delta);
  return Rational(2) - d2 / (Rational(r + 1) - Rational(2) * delta);
}

double lb_exponent(int r, double delta, double epsilon) { return 2.0 - (1.0 - delta) / r - epsilon; }

double log_h1_type1_bound(double lambda, double q, int a) {
  const double aa = static_cast<double>(a) * a;
  return std::log(4.0) + (aa / 2.0) * std::log(lambda) - ((aa - 5.0 * a) / 2.0) * std::log(q);
}

double log_h1_type2_bound(double lambda, double q, int b, int r) {
  const double r3 = static_cast<double>(r) * r * r;
  return std::log(4.0) + static_cast<double>(b) * r * std::log(lambda) -
         (static_cast<double>(b) * (r - 1) - 5.0 * r3) * std::log(q);
}

double log_h2_type1_bound(double lambda, double q, int a) {
  return std::log(4.0) + a * std::log(lambda) + a * std::log(q);
}

double log_h2_type2_bound(double lambda, double q, int b, int r) {
  return std::log(4.0) + b * std::log(lambda) + (r + 2.0) * std::log(q);
}

const std::vector<QuadrangleRow>& quadrangle_rows() {
  static const std::vector<QuadrangleRow> rows = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
  return rows;
}

}  // namespace rtlab::params
