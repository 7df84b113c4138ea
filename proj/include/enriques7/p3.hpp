#pragma once

#include "enriques7/gaussian.hpp"

#include <vector>

namespace enr7 {

// Projective points over Q(i) with 3 or 4 homogeneous coordinates.
using PPoint = std::vector<Qi>;

bool ppoint_is_zero(const PPoint& a);
bool ppoint_same(const PPoint& a, const PPoint& b);

// Exact collinearity: the stacked coordinate matrix has rank <= 2.
bool collinear_exact(const PPoint& a, const PPoint& b, const PPoint& c);

// Numerical corroboration: third singular value of the stacked matrix divided
// by the largest one; near zero iff numerically collinear.
double collinear_sv_ratio(const PPoint& a, const PPoint& b, const PPoint& c);

// Rank of the matrix whose rows are the given points.
int ppoint_rank(const std::vector<PPoint>& pts);

} // namespace enr7
