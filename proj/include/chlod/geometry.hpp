#ifndef CHLOD_GEOMETRY_HPP
#define CHLOD_GEOMETRY_HPP

#include "chlod/domain.hpp"
#include "chlod/func.hpp"

namespace chlod {

/// Triangle S_b = {(x, y): -b <= x <= b, y >= |x|, y <= b}.
struct TriangleDomain {
    double b = 1.0;
};

/// Disk B_b = {(x, y): x^2 + y^2 <= b^2}.
struct DiskDomain {
    double b = 1.0;
};

/// Quadrant of the disk with its sign pattern; points on the axes belong to
/// the lowest-index quadrant containing them.
enum class Quadrant { Q1, Q2, Q3, Q4 };

Quadrant classify_quadrant(double x, double y);

/// (+1/-1, +1/-1) sign pattern of the quadrant.
Point2 quadrant_signs(Quadrant q);

/// Map the unit square onto the triangle: x = b(2u-1), y = b(1 - v(1-|2u-1|)).
Point2 square_to_triangle(double u, double v, double b);

/// Operator transported onto the triangle; the inner degree is m_k = m - k.
double triangle_operator(const Func2D& g, int m, double b, double u, double v);

/// Global map of the unit square onto the disk (normalized form):
/// x = b(2u-1), y = b(2v-1) sqrt(1-(2u-1)^2).
Point2 square_to_disk_global(double u, double v, double b);

/// Operator transported by the global disk map.  The vertical fiber
/// degenerates at |x| = b, which is an error unless y = 0.
double disk_operator_global(const Func2D& g, int m, NodeScheme scheme, double b,
                            double x, double y);

/// Per-quadrant map: (x, y) = (s_x (u/b) sqrt(b^2 - v^2), s_y v) for
/// (u, v) in [0, b]^2.
Point2 square_to_disk_quadrant(Quadrant q, double u, double v, double b);

/// Piecewise four-quadrant disk operator with m_k = m - k.
double disk_operator_piecewise(const Func2D& g, int m, double b, double x,
                               double y);

}  // namespace chlod

#endif
