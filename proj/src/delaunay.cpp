#include "pachner/delaunay.hpp"

#include "pachner/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pachner {

namespace {

std::string label_set_str(const std::vector<int>& labels) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}";
    return os.str();
}

std::vector<Point> gather(const Configuration& config, const std::vector<int>& labels) {
    std::vector<Point> pts;
    pts.reserve(labels.size());
    for (int l : labels) pts.push_back(config.at(l));
    return pts;
}

} // namespace

void Configuration::validate() const {
    if (dim < 1) throw dimension_mismatch("configuration: dim must be positive");
    if (points.empty()) throw dimension_mismatch("configuration: no points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw dimension_mismatch("configuration: point dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw degenerate_configuration("configuration: duplicate points " +
                                               std::to_string(i + 1) + " and " +
                                               std::to_string(j + 1));
}

Simplex::Simplex(std::vector<int> l) : labels(std::move(l)) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1])
            throw bad_arity("simplex: repeated label " + std::to_string(labels[i]));
}

std::string Simplex::str() const { return label_set_str(labels); }

std::vector<std::vector<int>> label_subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Simplex> lower_hull(const Configuration& config,
                                const std::vector<Rational>& heights) {
    config.validate();
    const int d = config.dim;
    const int n = config.n();
    if (static_cast<int>(heights.size()) != n)
        throw dimension_mismatch("lower_hull: one height per point required");

    std::vector<Simplex> facets;
    for (const auto& subset : label_subsets(n, d + 1)) {
        const std::vector<Point> base = gather(config, subset);
        const Sign orient = orientation(base);
        if (orient == Sign::zero) continue; // vertical lift, never a lower facet

        // Lifted rows (x, h, 1); sign normalized so Positive = below the
        // hyperplane through the lifted subset.
        Matrix m(static_cast<std::size_t>(d) + 2, Row(static_cast<std::size_t>(d) + 2));
        for (int i = 0; i <= d; ++i) {
            const Point& p = base[static_cast<std::size_t>(i)];
            for (int j = 0; j < d; ++j) m[i][j] = p[j];
            m[i][d] = heights[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)] - 1)];
            m[i][d + 1] = 1;
        }

        bool facet = true;
        std::vector<int> on_plane;
        for (int q = 1; q <= n && facet; ++q) {
            if (std::binary_search(subset.begin(), subset.end(), q)) continue;
            const Point& pq = config.at(q);
            for (int j = 0; j < d; ++j) m[d + 1][j] = pq[j];
            m[d + 1][d] = heights[static_cast<std::size_t>(q - 1)];
            m[d + 1][d + 1] = 1;
            const Sign below = sign_from_int(sign_of_det(m)) * orient;
            if (below == Sign::positive) {
                facet = false;
            } else if (below == Sign::zero) {
                if (d == 1) {
                    // Flat chains in 1D refine uniquely: keep the facet only
                    // if the collinear lift point is outside the segment.
                    if (convex_hull_contains(base, pq)) facet = false;
                } else {
                    on_plane.push_back(q);
                }
            }
        }
        if (!facet) continue;
        if (!on_plane.empty()) {
            std::vector<int> face = subset;
            face.insert(face.end(), on_plane.begin(), on_plane.end());
            std::sort(face.begin(), face.end());
            throw degenerate_lift("lower_hull: non-simplicial lower face " +
                                  label_set_str(face));
        }
        facets.push_back(Simplex(subset));
    }
    return facets;
}

Triangulation delaunay(const Configuration& config) {
    config.validate();
    const int d = config.dim;
    const int n = config.n();
    if (n < d + 2)
        throw dimension_mismatch("delaunay: need at least d+2 points");
    {
        std::vector<Point> all = config.points;
        if (affine_rank(all) != d)
            throw degenerate_configuration("delaunay: configuration is not full-dimensional");
    }

    // C~_n exclusion: no d+1 points on a (d-2)-sphere (coplanar and cospherical).
    for (const auto& subset : label_subsets(n, d + 1)) {
        const std::vector<Point> pts = gather(config, subset);
        if (affine_rank(pts) <= d - 1 && co_spherical(pts))
            throw excluded_configuration("delaunay: points " + label_set_str(subset) +
                                         " lie on a (d-2)-sphere");
    }

    std::vector<Rational> heights;
    heights.reserve(static_cast<std::size_t>(n));
    for (const auto& p : config.points) heights.push_back(squared_norm(p));

    Triangulation tri;
    tri.dim = d;
    tri.n = n;
    try {
        for (auto& s : lower_hull(config, heights)) tri.simplices.insert(std::move(s));
    } catch (const degenerate_lift& e) {
        throw degenerate_configuration(std::string("delaunay: cospherical points make the "
                                                   "triangulation ambiguous: ") +
                                       e.what());
    }
    return tri;
}

bool is_delaunay(const Configuration& config, const Triangulation& tri) {
    config.validate();
    if (tri.dim != config.dim || tri.n != config.n()) return false;
    if (tri.simplices.empty()) return false;
    const int d = config.dim;
    const int n = config.n();

    std::map<std::vector<int>, int> facet_count;
    for (const auto& s : tri.simplices) {
        if (static_cast<int>(s.labels.size()) != d + 1) return false;
        for (int l : s.labels)
            if (l < 1 || l > n) return false;
        const std::vector<Point> pts = gather(config, s.labels);
        if (orientation(pts) == Sign::zero) return false;
        for (int q = 1; q <= n; ++q) {
            if (std::binary_search(s.labels.begin(), s.labels.end(), q)) continue;
            if (in_sphere(pts, config.at(q)) != Sign::negative) return false;
        }
        for (std::size_t drop = 0; drop < s.labels.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t i = 0; i < s.labels.size(); ++i)
                if (i != drop) facet.push_back(s.labels[i]);
            ++facet_count[facet];
        }
    }

    for (const auto& [facet, count] : facet_count) {
        if (count == 2) continue;
        if (count != 1) return false;
        // A count-1 facet must support the whole configuration on one side.
        std::vector<Point> fpts = gather(config, facet);
        int seen = 0; // -1, +1 once a strict side shows up
        for (int q = 1; q <= n; ++q) {
            if (std::binary_search(facet.begin(), facet.end(), q)) continue;
            std::vector<Point> probe = fpts;
            probe.push_back(config.at(q));
            const Sign s = orientation(probe);
            if (s == Sign::zero) continue;
            if (seen == 0)
                seen = static_cast<int>(s);
            else if (seen != static_cast<int>(s))
                return false;
        }
    }
    return true;
}

} // namespace pachner
