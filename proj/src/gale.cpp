#include "pachner/gale.hpp"

#include "pachner/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pachner {

GaleVectors gale_transform(const Configuration& config) {
    config.validate();
    const int d = config.dim;
    const int n = config.n();
    if (n < d + 2) throw bad_params("gale_transform: need n >= d+2");
    {
        std::vector<Point> all = config.points;
        if (affine_rank(all) != d)
            throw rank_deficient("gale_transform: affine rank below d");
    }
    // M = (d+1) x n lifted coordinate matrix (coordinates plus a row of ones).
    Matrix m(static_cast<std::size_t>(d) + 1, Row(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                config.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = 1;
    }
    GaleVectors gv;
    gv.n = n;
    gv.gdim = n - d - 1;
    gv.b = kernel_basis(m);
    if (static_cast<int>(gv.b.size()) != gv.gdim)
        throw rank_deficient("gale_transform: unexpected kernel dimension");
    return gv;
}

GaleDiagram gale_diagram(const GaleVectors& gv) {
    GaleDiagram gd;
    gd.n = gv.n;
    gd.gdim = gv.gdim;
    for (int label = 1; label <= gv.n; ++label) {
        Point v = gv.vector_of(label);
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
        gd.zero.push_back(zero);
        gd.directions.push_back(zero ? Point(static_cast<std::size_t>(gv.gdim), Rational(0))
                                     : primitive_integer(v));
    }
    return gd;
}

std::set<std::vector<int>> faces_from_gale(const GaleDiagram& diagram) {
    const int n = diagram.n;
    std::set<std::vector<int>> faces;
    // Brute force over complements; desk scale by construction.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<Point> complement;
        std::vector<int> j;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                j.push_back(i + 1);
            else
                complement.push_back(diagram.directions[static_cast<std::size_t>(i)]);
        }
        if (relint_contains_origin(complement)) faces.insert(j);
    }
    // The whole vertex set is the improper face; relint of the empty set is
    // conventionally empty so it is handled separately.
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    faces.insert(all);
    return faces;
}

namespace {

bool is_standard_slot_set(const std::vector<int>& slots, int l) {
    const int m = 2 * l;
    std::vector<bool> occ(static_cast<std::size_t>(m), false);
    for (int s : slots) occ[static_cast<std::size_t>(s)] = true;
    for (int s : slots)
        if (occ[static_cast<std::size_t>((s + l) % m)]) return false;
    // Every open half-plane bounded by a diameter holds >= 2 points; the
    // binding windows are the l-1 slots strictly between a vertex diameter.
    for (int q = 0; q < m; ++q) {
        int count = 0;
        for (int t = q + 1; t <= q + l - 1; ++t)
            if (occ[static_cast<std::size_t>(t % m)]) ++count;
        if (count < 2) return false;
    }
    return true;
}

std::vector<int> dihedral_canonical(const std::vector<int>& slots, int l) {
    const int m = 2 * l;
    std::vector<int> best;
    for (int refl = 0; refl < 2; ++refl) {
        for (int rot = 0; rot < m; ++rot) {
            std::vector<int> img;
            img.reserve(slots.size());
            for (int s : slots) img.push_back((((refl ? -s : s) + rot) % m + m) % m);
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        }
    }
    return best;
}

} // namespace

std::vector<StandardGaleDiagram> enumerate_standard_diagrams(int l) {
    if (l < 5) throw bad_params("enumerate_standard_diagrams: order must be >= 5");
    const int m = 2 * l;
    std::set<std::vector<int>> reps;
    // No antipodal pair plus |S| = l forces exactly one slot per diameter.
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        std::vector<int> slots;
        for (int i = 0; i < l; ++i)
            slots.push_back((mask & (1u << i)) ? (i + l) % m : i);
        std::sort(slots.begin(), slots.end());
        if (is_standard_slot_set(slots, l)) reps.insert(dihedral_canonical(slots, l));
    }
    std::vector<StandardGaleDiagram> out;
    for (const auto& s : reps) out.push_back(StandardGaleDiagram{l, s});
    return out;
}

namespace {

long long euler_phi(long long m) {
    long long r = m;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

} // namespace

long long count_standard_diagrams(int l) {
    if (l < 5) throw bad_params("count_standard_diagrams: order must be >= 5");
    long long sum = 0;
    for (long long h = 1; h <= l; h += 2)
        if (l % h == 0) sum += euler_phi(h) * (1LL << (l / h));
    if (sum % (4LL * l) != 0) throw error("count_standard_diagrams: non-integral sum");
    return (1LL << ((l - 3) / 2)) - (l + 1) / 2 + sum / (4LL * l);
}

std::pair<std::vector<int>, std::vector<int>> left_right_sets(
    const StandardGaleDiagram& diagram, int i) {
    const int l = diagram.order;
    if (i < 1 || i > l) throw bad_params("left_right_sets: index out of range");
    const int m = 2 * l;
    const int si = diagram.slots[static_cast<std::size_t>(i - 1)];
    std::vector<int> right, left;
    for (int j = 1; j <= l; ++j) {
        if (j == i) continue;
        const int diff = ((diagram.slots[static_cast<std::size_t>(j - 1)] - si) % m + m) % m;
        if (diff == 0 || diff == l) throw error("left_right_sets: antipodal slot");
        (diff < l ? left : right).push_back(j);
    }
    return {right, left};
}

Word relation_word(const StandardGaleDiagram& diagram, const std::vector<int>& m) {
    const int l = diagram.order;
    if (static_cast<int>(m.size()) != l)
        throw bad_arity("relation_word: need exactly order-many labels");
    {
        std::vector<int> sorted = m;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw bad_arity("relation_word: labels must be distinct");
    }
    const int period = 2 * l;
    Word word;
    for (int i = 1; i <= l; ++i) {
        auto [right, left] = left_right_sets(diagram, i);
        // Counterclockwise traversal order from point i.
        const int si = diagram.slots[static_cast<std::size_t>(i - 1)];
        auto ccw = [&](int a, int b) {
            const int da = ((diagram.slots[static_cast<std::size_t>(a - 1)] - si) % period + period) % period;
            const int db = ((diagram.slots[static_cast<std::size_t>(b - 1)] - si) % period + period) % period;
            return da < db;
        };
        std::sort(right.begin(), right.end(), ccw);
        std::sort(left.begin(), left.end(), ccw);
        std::vector<int> p, q;
        for (int j : right) p.push_back(m[static_cast<std::size_t>(j - 1)]);
        for (int j : left) q.push_back(m[static_cast<std::size_t>(j - 1)]);
        word.emplace_back(std::move(p), std::move(q), 1);
    }
    return word;
}

} // namespace pachner
