#include "pachner/exactgeom.hpp"

#include "pachner/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace pachner {

namespace {

void require_equal_dims(const std::vector<Point>& points, const char* who) {
    if (points.empty()) throw dimension_mismatch(std::string(who) + ": empty point list");
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw dimension_mismatch(std::string(who) + ": mixed dimensions");
}

} // namespace

Rational squared_norm(const Point& p) {
    Rational s(0);
    for (const auto& x : p) s += x * x;
    return s;
}

Sign orientation(const std::vector<Point>& points) {
    require_equal_dims(points, "orientation");
    const std::size_t d = points[0].size();
    if (points.size() != d + 1)
        throw dimension_mismatch("orientation: expected d+1 points");
    Matrix m(d + 1, Row(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = points[i][j];
        m[i][d] = 1;
    }
    return sign_from_int(sign_of_det(m));
}

Sign in_sphere(const std::vector<Point>& simplex, const Point& query) {
    require_equal_dims(simplex, "in_sphere");
    const std::size_t d = simplex[0].size();
    if (simplex.size() != d + 1 || query.size() != d)
        throw dimension_mismatch("in_sphere: expected d+1 simplex points and a d-point");
    const Sign orient = orientation(simplex);
    if (orient == Sign::zero) throw degenerate_simplex("in_sphere: flat simplex");

    // Paraboloid lift: rows (x, |x|^2, 1), query last. Inside the circumsphere
    // means below the lifted hyperplane; the product with the orientation sign
    // makes Positive mean strictly inside.
    Matrix m(d + 2, Row(d + 2));
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = simplex[i][j];
        m[i][d] = squared_norm(simplex[i]);
        m[i][d + 1] = 1;
    }
    for (std::size_t j = 0; j < d; ++j) m[d + 1][j] = query[j];
    m[d + 1][d] = squared_norm(query);
    m[d + 1][d + 1] = 1;
    return sign_from_int(sign_of_det(m)) * orient;
}

bool co_spherical(const std::vector<Point>& points) {
    require_equal_dims(points, "co_spherical");
    const std::size_t d = points[0].size();
    Matrix affine(points.size(), Row(d + 1));
    Matrix lifted(points.size(), Row(d + 2));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            affine[i][j] = points[i][j];
            lifted[i][j] = points[i][j];
        }
        affine[i][d] = 1;
        lifted[i][d] = squared_norm(points[i]);
        lifted[i][d + 1] = 1;
    }
    return rank(affine) == rank(lifted);
}

int affine_rank(const std::vector<Point>& points) {
    require_equal_dims(points, "affine_rank");
    const std::size_t d = points[0].size();
    if (points.size() == 1) return 0;
    Matrix diffs(points.size() - 1, Row(d));
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diffs[i - 1][j] = points[i][j] - points[0][j];
    return rank(diffs);
}

namespace {

// Exact ccw comparison of nonzero 2-vectors by angle in [0, 2pi).
bool angle_less(const Point& a, const Point& b) {
    auto half = [](const Point& v) {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        const int sy = sign_of(v[1]);
        if (sy != 0) return sy > 0 ? 0 : 1;
        return sign_of(v[0]) > 0 ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rational cross = a[0] * b[1] - a[1] * b[0];
    return sign_of(cross) > 0;
}

bool positive_span_2d(std::vector<Point> dirs) {
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const Point& a, const Point& b) {
                               return !angle_less(a, b) && !angle_less(b, a);
                           }),
               dirs.end());
    if (dirs.size() < 3) return false;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const Point& u = dirs[i];
        const Point& v = dirs[(i + 1) % dirs.size()];
        // ccw gap from u to its successor must stay below pi
        if (sign_of(u[0] * v[1] - u[1] * v[0]) <= 0) return false;
    }
    return true;
}

} // namespace

bool relint_contains_origin(const std::vector<Point>& vectors) {
    require_equal_dims(vectors, "relint_contains_origin");

    std::vector<Point> nonzero;
    for (const auto& v : vectors) {
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) { zero = false; break; }
        if (!zero) nonzero.push_back(v);
    }
    // Zero vectors absorb any positive weight; only the nonzero ones constrain.
    if (nonzero.empty()) return true;

    Matrix span(nonzero.begin(), nonzero.end());
    const int r = rank(span);

    if (r == 1) {
        // Need both directions along the line present.
        const Point& ref = nonzero[0];
        std::size_t axis = 0;
        while (ref[axis] == 0) ++axis;
        bool pos = false, neg = false;
        for (const auto& v : nonzero) {
            if (sign_of(v[axis]) > 0) pos = true;
            if (sign_of(v[axis]) < 0) neg = true;
        }
        return pos && neg;
    }

    if (r == 2) {
        // Coordinates in a planar basis chosen from the vectors themselves.
        const Point& e0 = nonzero[0];
        std::size_t second = 1;
        while (second < nonzero.size()) {
            Matrix pair = {e0, nonzero[second]};
            if (rank(pair) == 2) break;
            ++second;
        }
        const Point& e1 = nonzero[second];
        // Solve v = alpha e0 + beta e1 exactly via two independent coordinates.
        std::size_t c0 = 0, c1 = 0;
        bool found = false;
        for (std::size_t i = 0; i < e0.size() && !found; ++i)
            for (std::size_t j = i + 1; j < e0.size() && !found; ++j) {
                if (e0[i] * e1[j] - e0[j] * e1[i] != 0) {
                    c0 = i;
                    c1 = j;
                    found = true;
                }
            }
        const Rational det2 = e0[c0] * e1[c1] - e0[c1] * e1[c0];
        std::vector<Point> planar;
        for (const auto& v : nonzero) {
            const Rational alpha = (v[c0] * e1[c1] - v[c1] * e1[c0]) / det2;
            const Rational beta = (e0[c0] * v[c1] - e0[c1] * v[c0]) / det2;
            planar.push_back({alpha, beta});
        }
        return positive_span_2d(std::move(planar));
    }

    // General case: strictly positive dependency exists iff {mu >= 0 :
    // sum_i (1 + mu_i) v_i = 0} is feasible.
    const std::size_t dim = vectors[0].size();
    Matrix a(dim, Row(nonzero.size()));
    Row b(dim, Rational(0));
    for (std::size_t j = 0; j < nonzero.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            a[i][j] = nonzero[j][i];
            b[i] -= nonzero[j][i];
        }
    return lp_feasible_eq_nonneg(a, b);
}

bool convex_hull_contains(const std::vector<Point>& points, const Point& point) {
    require_equal_dims(points, "convex_hull_contains");
    if (points[0].size() != point.size())
        throw dimension_mismatch("convex_hull_contains: point dimension");
    // {lambda >= 0 : sum lambda_i p_i = point, sum lambda_i = 1}
    const std::size_t dim = point.size();
    Matrix a(dim + 1, Row(points.size()));
    Row b(dim + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = points[j][i];
        a[dim][j] = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = point[i];
    b[dim] = 1;
    return lp_feasible_eq_nonneg(a, b);
}

} // namespace pachner
