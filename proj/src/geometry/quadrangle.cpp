#include "rtlab/geometry/quadrangle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rtlab/bitset.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/prime_field.hpp"

namespace rtlab::geometry {

namespace {

int encode(const Vec4& v, int q) { return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]; }

Vec4 normalize(Vec4 v, const PrimeField& f) {
  for (int c : v) {
    if (c != 0) {
      const int inv = f.inv(c);
      for (auto& x : v) x = f.mul(x, inv);
      break;
    }
  }
  return v;
}

}  // namespace

std::vector<Vec4> projective_points_pg3(int q) {
  std::vector<Vec4> pts;
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    int total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (int code = 0; code < total; ++code) {
      Vec4 v{0, 0, 0, 0};
      v[static_cast<std::size_t>(lead)] = 1;
      int c = code;
      for (int i = 3; i > lead; --i) {
        v[static_cast<std::size_t>(i)] = c % q;
        c /= q;
      }
      pts.push_back(v);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

int symplectic_form(const Vec4& x, const Vec4& y, int q) {
  const std::int64_t v = static_cast<std::int64_t>(x[0]) * y[1] - static_cast<std::int64_t>(x[1]) * y[0] +
                         static_cast<std::int64_t>(x[2]) * y[3] - static_cast<std::int64_t>(x[3]) * y[2];
  auto r = static_cast<int>(v % q);
  return r < 0 ? r + q : r;
}

IncidenceStructure build_w_quadrangle(int q, int max_order) {
  const PrimeField field(q);
  if (q > max_order)
    throw Error(ErrorCode::size_limit,
                "quadrangle order " + std::to_string(q) + " exceeds " + std::to_string(max_order));

  const auto pts = projective_points_pg3(q);
  const auto n = pts.size();
  std::vector<int> index_of(static_cast<std::size_t>(q * q * q * q), -1);
  for (std::size_t i = 0; i < n; ++i) index_of[static_cast<std::size_t>(encode(pts[i], q))] = static_cast<int>(i);

  std::vector<DynBitset> covered(n, DynBitset(n));
  std::vector<Line> lines;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (covered[u].test(v) || symplectic_form(pts[u], pts[v], q) != 0) continue;
      Line l{static_cast<int>(u)};
      for (int a = 0; a < q; ++a) {
        Vec4 w;
        for (std::size_t k = 0; k < 4; ++k) w[k] = field.add(pts[v][k], field.mul(a, pts[u][k]));
        l.push_back(index_of[static_cast<std::size_t>(encode(normalize(w, field), q))]);
      }
      std::sort(l.begin(), l.end());
      for (int x : l)
        for (int y : l)
          if (x != y) covered[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
      lines.push_back(std::move(l));
    }
  }
  return IncidenceStructure(static_cast<int>(n), std::move(lines), StructureKind::quadrangle);
}

VerificationReport verify_gq_axioms(const IncidenceStructure& s) {
  VerificationReport report;
  report.property = "generalized-quadrangle-axioms";
  report.params = {{"kind", std::string(to_string(s.kind()))},
                   {"points", s.num_points()},
                   {"lines", s.num_lines()}};

  const auto n = static_cast<std::size_t>(s.num_points());

  // Q1: any two points on at most one line.
  if (auto v = s.linearity_violation()) {
    report.add_check("Q1", Status::fail,
                     {{"points", {(*v)[0], (*v)[1]}}, {"lines", {(*v)[2], (*v)[3]}}});
  } else {
    report.add_check("Q1", Status::pass);
  }

  // Q2: a point off a line is collinear with exactly one point of the line.
  std::vector<DynBitset> collinear(n, DynBitset(n));
  for (const auto& l : s.lines())
    for (int x : l)
      for (int y : l)
        if (x != y) collinear[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
  bool q2_ok = true;
  nlohmann::json q2_witness;
  for (std::size_t u = 0; u < n && q2_ok; ++u) {
    for (std::size_t li = 0; li < s.num_lines(); ++li) {
      const auto& l = s.line(li);
      if (std::binary_search(l.begin(), l.end(), static_cast<int>(u))) continue;
      std::vector<int> hits;
      for (int w : l)
        if (collinear[u].test(static_cast<std::size_t>(w))) hits.push_back(w);
      if (hits.size() != 1) {
        q2_ok = false;
        q2_witness = {{"point", u}, {"line", li}, {"collinear_points", hits}};
        if (hits.size() >= 2) {
          // The two lines through u and the hit points close a triangle with l.
          q2_witness["triangle"] = {{"vertices", {static_cast<int>(u), hits[0], hits[1]}}};
        }
        break;
      }
    }
  }
  report.add_check("Q2", q2_ok ? Status::pass : Status::fail, q2_witness);

  // Q3: uniform line size p+1 and point degree q+1.
  const auto deg = s.degrees();
  bool q3_ok = s.num_lines() > 0 && n > 0;
  const std::size_t line_size = s.num_lines() > 0 ? s.line(0).size() : 0;
  const int point_degree = n > 0 ? deg[0] : 0;
  nlohmann::json q3_detail;
  for (std::size_t li = 0; q3_ok && li < s.num_lines(); ++li) {
    if (s.line(li).size() != line_size) {
      q3_ok = false;
      q3_detail = {{"line", li}, {"size", s.line(li).size()}, {"expected", line_size}};
    }
  }
  for (std::size_t u = 0; q3_ok && u < n; ++u) {
    if (deg[u] != point_degree) {
      q3_ok = false;
      q3_detail = {{"point", u}, {"degree", deg[u]}, {"expected", point_degree}};
    }
  }
  const long long p = static_cast<long long>(line_size) - 1;
  const long long qq = static_cast<long long>(point_degree) - 1;
  q3_detail["p"] = p;
  q3_detail["q"] = qq;
  report.add_check("Q3", q3_ok ? Status::pass : Status::fail, q3_detail);

  // Q4: point and line counts.
  const long long expected_points = (p * qq + 1) * (p + 1);
  const long long expected_lines = (p * qq + 1) * (qq + 1);
  const bool q4_ok = q3_ok && expected_points == static_cast<long long>(n) &&
                     expected_lines == static_cast<long long>(s.num_lines());
  report.add_check("Q4", q4_ok ? Status::pass : Status::fail,
                   {{"points", n},
                    {"expected_points", expected_points},
                    {"lines", s.num_lines()},
                    {"expected_lines", expected_lines}});

  // Q5: p <= q^2 and q <= p^2.
  const bool q5_ok = q3_ok && p >= 1 && qq >= 1 && p <= qq * qq && qq <= p * p;
  report.add_check("Q5", q5_ok ? Status::pass : Status::fail, {{"p", p}, {"q", qq}});

  report.settle();
  report.value = {{"p", p}, {"q", qq}};
  if (!q2_ok) report.witness = q2_witness;
  return report;
}

}  // namespace rtlab::geometry
