#ifndef PACHNER_DELAUNAY_HPP
#define PACHNER_DELAUNAY_HPP

#include "pachner/exactgeom.hpp"

#include <set>
#include <string>
#include <vector>

namespace pachner {

// n labeled points in R^d; labels are 1..n in storage order.
struct Configuration {
    int dim = 0;
    std::vector<Point> points;

    int n() const { return static_cast<int>(points.size()); }
    const Point& at(int label) const { return points[static_cast<std::size_t>(label - 1)]; }

    // Checks dimensions, pairwise distinctness and full affine rank.
    // Throws dimension_mismatch / degenerate_configuration.
    void validate() const;
};

// Sorted tuple of d+1 distinct labels.
struct Simplex {
    std::vector<int> labels;

    Simplex() = default;
    explicit Simplex(std::vector<int> l);

    bool operator<(const Simplex& o) const { return labels < o.labels; }
    bool operator==(const Simplex& o) const { return labels == o.labels; }
    std::string str() const;
};

struct Triangulation {
    int dim = 0;
    int n = 0;
    std::set<Simplex> simplices;

    bool operator==(const Triangulation& o) const {
        return dim == o.dim && n == o.n && simplices == o.simplices;
    }
    bool operator!=(const Triangulation& o) const { return !(*this == o); }
    bool operator<(const Triangulation& o) const { return simplices < o.simplices; }
};

// Facets of the lower convex hull of the lift (x_i, h_i), projected to label
// sets. For d = 1 flat stretches subdivide canonically through their interior
// points; for d >= 2 any extra point on a facet's supporting hyperplane
// raises degenerate_lift.
std::vector<Simplex> lower_hull(const Configuration& config,
                                const std::vector<Rational>& heights);

// The Delaunay triangulation (heights |x|^2). Throws excluded_configuration
// when d+1 points lie on a (d-2)-sphere, degenerate_configuration when d+2
// cospherical points make the triangulation ambiguous.
Triangulation delaunay(const Configuration& config);

// Independent oracle: every simplex nondegenerate with a strictly empty open
// circumball, interior facets shared by exactly two simplices, boundary
// facets supporting the whole configuration, and at least one simplex.
bool is_delaunay(const Configuration& config, const Triangulation& tri);

// All label subsets of the given size, lexicographic.
std::vector<std::vector<int>> label_subsets(int n, int size);

} // namespace pachner

#endif
