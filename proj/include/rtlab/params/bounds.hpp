#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtlab/params/construction.hpp"

namespace rtlab::params {

using BoundInputs = std::map<std::string, double>;

struct BoundReport {
  std::string name;
  BoundInputs inputs;
  double value = 0.0;
  double log_value = 0.0;  // natural log of value where value > 0
  std::string formula_ref;
  nlohmann::json extra;  // secondary quantities, e.g. both sides of an inequality
};

nlohmann::json to_json(const BoundReport& report);

// Names accepted by evaluate_bound.
const std::vector<std::string>& bound_names();

// Throws Error(unknown_bound) for unknown names, Error(bad_inputs) for
// missing or out-of-domain inputs.
BoundReport evaluate_bound(const std::string& name, const BoundInputs& inputs);

// |(x+ex)/(y+ey) - x/y| against (|ex y| + 3|ey x|)/y^2.
struct FractionCheck {
  double bound = 0.0;
  double deviation = 0.0;
  bool holds = true;
};
// Throws Error(bad_range) unless x, y != 0 and |ex/x|, |ey/y| <= 1/2.
FractionCheck fraction_error_bound(double x, double y, double ex, double ey);
BoundReport fraction_error_report(double x, double y, double ex, double ey);

// Exponent of the Ramsey-Turan upper bound for K_{s+r} with alpha_s < n^delta:
// 2 - (1-d)^2/(r-d) if (r-d)/(1-d) is an integer, else 2 - (1-d)^2/(r+1-2d).
double ub_exponent(int r, double delta);
Rational ub_exponent(int r, Rational delta);
// 2 - (1-d)/r - eps
double lb_exponent(int r, double delta, double epsilon);

// Natural logs of the dangerous-set count bounds.
double log_h1_type1_bound(double lambda, double q, int a);
double log_h1_type2_bound(double lambda, double q, int b, int r);
double log_h2_type1_bound(double lambda, double q, int a);
double log_h2_type2_bound(double lambda, double q, int b, int r);

// Quadrangle-derived rows: orders (p, q) = (R^pe, R^qe) give order n ~ R^(2pe+qe),
// alpha scale pq = R^(pe+qe) and edges p^3 q^2 = R^(3pe+2qe).
struct QuadrangleRow {
  int p_exp = 1;
  int q_exp = 1;
  Rational n_exponent() const { return Rational(2 * p_exp + q_exp); }
  Rational delta() const { return Rational(p_exp + q_exp, 2 * p_exp + q_exp); }
  Rational edge_exponent() const { return Rational(3 * p_exp + 2 * q_exp, 2 * p_exp + q_exp); }
};
const std::vector<QuadrangleRow>& quadrangle_rows();

}  // namespace rtlab::params
