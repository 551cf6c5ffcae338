#ifndef PACHNER_GALE_HPP
#define PACHNER_GALE_HPP

#include "pachner/delaunay.hpp"
#include "pachner/word.hpp"

#include <set>
#include <vector>

namespace pachner {

// Rows form the canonical kernel basis B of the lifted coordinate matrix M
// (RREF, primitive integer rows); column i is the Gale vector of point i.
struct GaleVectors {
    int n = 0;
    int gdim = 0; // n - d - 1
    Matrix b;     // gdim rows, n columns

    Point vector_of(int label) const {
        Point v(static_cast<std::size_t>(gdim));
        for (int r = 0; r < gdim; ++r)
            v[static_cast<std::size_t>(r)] =
                b[static_cast<std::size_t>(r)][static_cast<std::size_t>(label - 1)];
        return v;
    }
};

// Rays of the Gale vectors: primitive integer directions plus zero flags.
// Keeping the ray instead of the unit vector stays inside the rationals and
// preserves every relint / half-plane predicate.
struct GaleDiagram {
    int n = 0;
    int gdim = 0;
    std::vector<Point> directions; // primitive or zero
    std::vector<bool> zero;
};

// l occupied vertices of the regular 2l-gon (slot p = e^{i pi p / l}), stored
// as the lexicographically least slot set in the dihedral orbit. No antipodal
// pair; every open half-plane through the center holds at least two points.
struct StandardGaleDiagram {
    int order = 0;
    std::vector<int> slots; // strictly increasing, in [0, 2*order)

    bool operator==(const StandardGaleDiagram& o) const {
        return order == o.order && slots == o.slots;
    }
};

GaleVectors gale_transform(const Configuration& config);

GaleDiagram gale_diagram(const GaleVectors& gv);

// Face label sets J of the source polytope: J is a face iff 0 lies in
// relint(Ybar restricted to the complement). The improper face (all labels)
// is included; the empty face is not reported.
std::set<std::vector<int>> faces_from_gale(const GaleDiagram& diagram);

// All standard diagrams of order l up to the dihedral symmetry of the 2l-gon.
std::vector<StandardGaleDiagram> enumerate_standard_diagrams(int l);

// Closed-form count. The bracketed middle term is floor((l+1)/2); the
// enumeration test pins the formula down for 5 <= l <= 10.
long long count_standard_diagrams(int l);

// Point indices (1-based, counterclockwise) in the open right/left half-plane
// of the oriented line spanned by point i. Pure slot arithmetic: j is right
// of i iff (slot_j - slot_i) mod 2l lies in (l, 2l).
std::pair<std::vector<int>, std::vector<int>> left_right_sets(
    const StandardGaleDiagram& diagram, int i);

// The (k+1)-gon relation word: product over i of a_{M_R(i), M_L(i)}, label
// sequences in the diagram's counterclockwise traversal order from point i.
Word relation_word(const StandardGaleDiagram& diagram, const std::vector<int>& m);

} // namespace pachner

#endif
