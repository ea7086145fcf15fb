#pragma once

#include <array>
#include <vector>

#include "rtlab/geometry/incidence.hpp"
#include "rtlab/report.hpp"

namespace rtlab::geometry {

using Vec4 = std::array<int, 4>;

// Projective points of GF(q)^4 in canonical form (first nonzero coordinate
// is 1), listed in lexicographic order. Index in this list is the point id.
std::vector<Vec4> projective_points_pg3(int q);

// Alternating form x1*y2 - x2*y1 + x3*y4 - x4*y3 over GF(q).
int symplectic_form(const Vec4& x, const Vec4& y, int q);

// The symplectic quadrangle W(q): lines are the totally isotropic lines of
// PG(3,q). Throws not_prime / size_limit.
IncidenceStructure build_w_quadrangle(int q, int max_order = 13);

// Checks Q1-Q5 exhaustively. Failures are reported with witnesses; the
// function itself does not throw on non-quadrangles.
VerificationReport verify_gq_axioms(const IncidenceStructure& structure);

}  // namespace rtlab::geometry
