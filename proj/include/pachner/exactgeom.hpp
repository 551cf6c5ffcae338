#ifndef PACHNER_EXACTGEOM_HPP
#define PACHNER_EXACTGEOM_HPP

#include "pachner/linalg.hpp"
#include "pachner/rational.hpp"

#include <vector>

namespace pachner {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_from_int(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign operator*(Sign a, Sign b) {
    return sign_from_int(static_cast<int>(a) * static_cast<int>(b));
}

// A point is its coordinate vector; the ambient dimension is the length.
using Point = std::vector<Rational>;

Rational squared_norm(const Point& p);

// Sign of det of the (d+1)x(d+1) matrix whose rows are the points with an
// appended 1; Zero iff the points are affinely dependent. Expects exactly
// d+1 points of dimension d.
Sign orientation(const std::vector<Point>& points);

// Position of `query` relative to the circumsphere of `simplex` (d+1 points):
// Positive strictly inside, Zero on the sphere, Negative outside. The lifted
// determinant is normalized by the simplex orientation so the answer does not
// depend on vertex order. Throws degenerate_simplex if the simplex is flat.
Sign in_sphere(const std::vector<Point>& simplex, const Point& query);

// True iff all points lie on a common sphere (or a lower-dimensional sphere
// inside their affine hull): appending the squared-norm column to the affine
// coordinate matrix must not raise its rank.
bool co_spherical(const std::vector<Point>& points);

// Dimension of the affine hull (0 for a single point).
int affine_rank(const std::vector<Point>& points);

// True iff the origin is a strictly positive convex combination of the
// vectors. Dimensions <= 2 are decided by direction enumeration; higher
// dimensions fall back to exact LP feasibility.
bool relint_contains_origin(const std::vector<Point>& vectors);

// Convenience: true iff `point` lies in the closed convex hull of `points`.
bool convex_hull_contains(const std::vector<Point>& points, const Point& point);

} // namespace pachner

#endif
