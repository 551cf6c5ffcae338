#include <doctest.h>

#include "pachner/dynamics.hpp"
#include "pachner/errors.hpp"
#include "pachner/gale.hpp"
#include "pachner/groups.hpp"

#include <algorithm>
#include <set>

using namespace pachner;

namespace {

Point pt3(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

// Tetrahedron with circumsphere x^2+y^2+z^2 = 3 plus a fifth point that dives
// from above through the sphere to the center and back. The slight tilt keeps
// the path off the hull edges so it enters through a facet interior.
Trajectory through_sphere_round_trip() {
    Trajectory t;
    t.dim = 3;
    t.closed = true;
    t.times = {Rational(0), Rational(1, 2), Rational(1)};
    const std::vector<Point> tetra = {pt3(1, 1, 1), pt3(1, -1, -1), pt3(-1, 1, -1),
                                      pt3(-1, -1, 1)};
    for (const auto& p : tetra) t.paths.push_back({p, p, p});
    const Point top = {Rational(1, 8), Rational(1, 9), Rational(3)};
    t.paths.push_back({top, pt3(0, 0, 0), top});
    return t;
}

Trajectory reversed(const Trajectory& traj) {
    Trajectory out = traj;
    const std::size_t m = traj.times.size();
    for (std::size_t i = 0; i < m; ++i) out.times[i] = 1 - traj.times[m - 1 - i];
    for (std::size_t p = 0; p < traj.paths.size(); ++p)
        for (std::size_t i = 0; i < m; ++i) out.paths[p][i] = traj.paths[p][m - 1 - i];
    return out;
}

} // namespace

TEST_CASE("constant trajectory traces to the empty word") {
    Trajectory t;
    t.dim = 2;
    t.closed = true;
    t.times = {Rational(0), Rational(1)};
    const std::vector<Point> pts = {{Rational(0), Rational(0)},
                                    {Rational(5), Rational(0)},
                                    {Rational(0), Rational(5)},
                                    {Rational(1), Rational(1)}};
    for (const auto& p : pts) t.paths.push_back({p, p});
    CHECK(trace(t).empty());
    CHECK(triangulation_at(t, Rational(0)) == triangulation_at(t, Rational(1, 3)));
    CHECK(triangulation_at(t, Rational(1, 3)) == triangulation_at(t, Rational(1)));
}

TEST_CASE("triangulation_at interpolates exactly") {
    Trajectory t = through_sphere_round_trip();
    // At a breakpoint the stored configuration decides.
    Configuration c0;
    c0.dim = 3;
    for (const auto& path : t.paths) c0.points.push_back(path[0]);
    CHECK(triangulation_at(t, Rational(0)) == delaunay(c0));

    // Midpoint of the first segment: the mover is halfway to the center.
    const Configuration mid = t.at(Rational(1, 4));
    CHECK(mid.points[4] == Point{Rational(1, 16), Rational(1, 18), Rational(3, 2)});
    CHECK(triangulation_at(t, Rational(1, 4)) == delaunay(mid));
}

TEST_CASE("diff_move recognizes a 2-3 fan swap") {
    // Replace the two tetrahedra sharing triangle 345 with the three around edge 12.
    Triangulation t1;
    t1.dim = 3;
    t1.n = 5;
    t1.simplices.insert(Simplex({1, 3, 4, 5}));
    t1.simplices.insert(Simplex({2, 3, 4, 5}));
    Triangulation t2;
    t2.dim = 3;
    t2.n = 5;
    t2.simplices.insert(Simplex({1, 2, 3, 4}));
    t2.simplices.insert(Simplex({1, 2, 3, 5}));
    t2.simplices.insert(Simplex({1, 2, 4, 5}));

    const Letter fwd = diff_move(t1, t2);
    CHECK(fwd.p == std::vector<int>{1, 2});
    CHECK(fwd.q == std::vector<int>{3, 4, 5});
    CHECK(fwd.exponent == 1);

    const Letter back = diff_move(t2, t1);
    CHECK(back.p == std::vector<int>{1, 2});
    CHECK(back.q == std::vector<int>{3, 4, 5});
    CHECK(back.exponent == -1);
}

TEST_CASE("diff_move rejects two independent flips") {
    Triangulation t1;
    t1.dim = 3;
    t1.n = 10;
    for (auto s : {std::vector<int>{1, 3, 4, 5}, {2, 3, 4, 5}, {6, 8, 9, 10}, {7, 8, 9, 10}})
        t1.simplices.insert(Simplex(s));
    Triangulation t2;
    t2.dim = 3;
    t2.n = 10;
    for (auto s : {std::vector<int>{1, 2, 3, 4},
                   {1, 2, 3, 5},
                   {1, 2, 4, 5},
                   {6, 7, 8, 9},
                   {6, 7, 8, 10},
                   {6, 7, 9, 10}})
        t2.simplices.insert(Simplex(s));
    CHECK_THROWS_AS(diff_move(t1, t2), not_single_move);
}

TEST_CASE("through-sphere round trip freely cancels") {
    const Trajectory t = through_sphere_round_trip();
    const Word w = trace(t);
    REQUIRE(w.size() == 2);
    for (const auto& l : w) CHECK(l.p.size() + l.q.size() == 5);
    CHECK(free_reduce(w, Flavor::plain).empty());
    CHECK(psi(w, 5, 3).is_zero());
}

TEST_CASE("reverse trajectory gives the inverted reversed word") {
    const Trajectory t = through_sphere_round_trip();
    const Word w = trace(t);
    const Word back = trace(reversed(t));
    REQUIRE(back.size() == w.size());
    const Word expected = inverse(w);
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(canonicalize(back[i], Flavor::plain) ==
              canonicalize(expected[i], Flavor::plain));
}

TEST_CASE("trace concatenates over subpaths") {
    const Trajectory whole = through_sphere_round_trip();

    Trajectory down;
    down.dim = 3;
    down.closed = false;
    down.times = {Rational(0), Rational(1)};
    for (const auto& path : whole.paths) down.paths.push_back({path[0], path[1]});
    Trajectory up;
    up.dim = 3;
    up.closed = false;
    up.times = {Rational(0), Rational(1)};
    for (const auto& path : whole.paths) up.paths.push_back({path[1], path[2]});

    Word expected = trace(down);
    const Word second = trace(up);
    expected.insert(expected.end(), second.begin(), second.end());

    const Word w = trace(whole);
    REQUIRE(w.size() == expected.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(canonicalize(w[i], Flavor::plain) == canonicalize(expected[i], Flavor::plain));
}

TEST_CASE("trace events carry sub-resolution brackets around each change") {
    const Trajectory t = through_sphere_round_trip();
    const Rational res(1, 1 << 20);
    const auto events = trace_events(t, res);
    int moves = 0;
    for (const auto& e : events) {
        CHECK(e.bracket_hi - e.bracket_lo < res);
        const Triangulation before = triangulation_at(t, e.bracket_lo);
        const Triangulation after = triangulation_at(t, e.bracket_hi);
        CHECK(before != after);
        if (e.letters.empty()) {
            // boundary apparition: one simplex appears or vanishes
            std::vector<Simplex> changed;
            std::set_symmetric_difference(before.simplices.begin(), before.simplices.end(),
                                          after.simplices.begin(), after.simplices.end(),
                                          std::back_inserter(changed));
            CHECK(changed.size() == 1);
        } else {
            ++moves;
            REQUIRE(e.letters.size() == 1);
            CHECK(canonicalize(diff_move(before, after), Flavor::plain) ==
                  canonicalize(e.letters[0], Flavor::plain));
        }
    }
    CHECK(moves == 2);
    for (std::size_t i = 1; i < events.size(); ++i)
        CHECK(events[i - 1].bracket_hi <= events[i].bracket_lo);
}

TEST_CASE("every trace letter spans d+2 labels") {
    const Word w = trace(through_sphere_round_trip());
    for (const auto& l : w) {
        std::set<int> support(l.p.begin(), l.p.end());
        support.insert(l.q.begin(), l.q.end());
        CHECK(support.size() == 5);
    }
}

TEST_CASE("perturb with zero magnitude is the identity") {
    const Trajectory t = through_sphere_round_trip();
    const Trajectory p = perturb(t, 42, Rational(0));
    CHECK(p.times == t.times);
    CHECK(p.paths == t.paths);
}

TEST_CASE("perturb keeps endpoints and changes interior breakpoints") {
    const Trajectory t = through_sphere_round_trip();
    const Trajectory p = perturb(t, 42, Rational(1, 64));
    CHECK(p.paths[4][0] == t.paths[4][0]);
    CHECK(p.paths[4][2] == t.paths[4][2]);
    CHECK(p.paths[4][1] != t.paths[4][1]);
    p.validate(); // still a valid closed trajectory
}

TEST_CASE("perturbed open path keeps its endpoint triangulations") {
    const Trajectory whole = through_sphere_round_trip();
    Trajectory open_path;
    open_path.dim = 3;
    open_path.closed = false;
    open_path.times = {Rational(0), Rational(1, 2), Rational(1)};
    for (const auto& path : whole.paths)
        open_path.paths.push_back({path[0], path[1], path[0]});
    // interior breakpoint moves, endpoints stay
    const Trajectory p = perturb(open_path, 99, Rational(1, 256));
    CHECK(triangulation_at(p, Rational(0)) == triangulation_at(open_path, Rational(0)));
    CHECK(triangulation_at(p, Rational(1)) == triangulation_at(open_path, Rational(1)));
}

TEST_CASE("perturbed loop keeps psi and abelianized images") {
    const Trajectory t = through_sphere_round_trip();
    const Word w0 = trace(t);
    const Trajectory p = perturb(t, 7, Rational(1, 128));
    const Word w1 = trace(p);
    CHECK(psi(w0, 5, 3) == psi(w1, 5, 3));
    GeneratorIndex gens(5, 5, Flavor::plain);
    CHECK(abelianized_row(w0, gens) == abelianized_row(w1, gens));
}

namespace {

// Two tetrahedron-plus-mover systems far apart; cluster B is a similarity
// image of cluster A (rational rotation, scale 9/8, translation), so both
// movers cross their circumspheres at exactly the same (irrational) time.
Trajectory twin_cluster_scene(bool rotated) {
    Trajectory t;
    t.dim = 3;
    t.closed = false;
    t.times = {Rational(0), Rational(1)};
    const Rational lam(9, 8);
    const Point shift = {Rational(100), Rational(1, 3), Rational(1, 7)};
    auto sim = [&](const Point& p) {
        Rational x = p[0], y = p[1];
        if (rotated) {
            x = (Rational(3) * p[0] - Rational(4) * p[1]) / 5;
            y = (Rational(4) * p[0] + Rational(3) * p[1]) / 5;
        }
        return Point{lam * x + shift[0], lam * y + shift[1], lam * p[2] + shift[2]};
    };
    const std::vector<Point> tetra = {pt3(1, 1, 1), pt3(1, -1, -1), pt3(-1, 1, -1),
                                      pt3(-1, -1, 1)};
    for (const auto& p : tetra) t.paths.push_back({p, p});
    for (const auto& p : tetra) t.paths.push_back({sim(p), sim(p)});
    const Point a0 = {Rational(1, 8), Rational(1, 9), Rational(3)};
    const Point a1 = pt3(0, 0, 0);
    t.paths.push_back({a0, a1});
    t.paths.push_back({sim(a0), sim(a1)});
    return t;
}

} // namespace

TEST_CASE("coincident independent flips are emitted in lexicographic order") {
    const Trajectory t = twin_cluster_scene(true);
    const Word w = trace(t);
    // The two local moves share one irrational event time, so they are
    // resolved inside a single bracket and sorted by canonical letter.
    const Letter move_a = canonicalize(Letter({1, 4}, {2, 3, 9}, -1), Flavor::plain);
    const Letter move_b = canonicalize(Letter({5, 8}, {6, 7, 10}, -1), Flavor::plain);
    int pos_a = -1;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (canonicalize(w[i], Flavor::plain) == move_a) pos_a = static_cast<int>(i);
    REQUIRE(pos_a >= 0);
    REQUIRE(pos_a + 1 < static_cast<int>(w.size()));
    CHECK(canonicalize(w[static_cast<std::size_t>(pos_a) + 1], Flavor::plain) == move_b);
    for (const auto& l : w) CHECK(l.p.size() + l.q.size() == 5);
}

TEST_CASE("flips at an exactly rational common time resolve through the retry splits") {
    // Each mover passes through a rational point of its cluster's circumsphere
    // at t = 1/2 exactly, so the first bisection sample of the segment lands
    // on the singular configuration and the tracer must re-split; the two
    // moves then share the rational event time and come out in lex order.
    Trajectory t;
    t.dim = 3;
    t.closed = false;
    t.times = {Rational(0), Rational(1)};
    const Rational lam(9, 8);
    const Point shift = {Rational(100), Rational(1, 3), Rational(1, 7)};
    auto sim = [&](const Point& p) {
        const Rational x = (Rational(3) * p[0] - Rational(4) * p[1]) / 5;
        const Rational y = (Rational(4) * p[0] + Rational(3) * p[1]) / 5;
        return Point{lam * x + shift[0], lam * y + shift[1], lam * p[2] + shift[2]};
    };
    const std::vector<Point> tetra = {pt3(1, 1, 1), pt3(1, -1, -1), pt3(-1, 1, -1),
                                      pt3(-1, -1, 1)};
    for (const auto& p : tetra) t.paths.push_back({p, p});
    for (const auto& p : tetra) t.paths.push_back({sim(p), sim(p)});
    // (5/3, 1/3, 1/3) lies on x^2+y^2+z^2 = 3; the line through it with
    // direction (1, 1/7, -2) crosses the sphere transversally at t = 1/2.
    const Point q = {Rational(5, 3), Rational(1, 3), Rational(1, 3)};
    const Point dir = {Rational(1), Rational(1, 7), Rational(-2)};
    Point a0(3), a1(3);
    for (int i = 0; i < 3; ++i) {
        a0[static_cast<std::size_t>(i)] =
            q[static_cast<std::size_t>(i)] - dir[static_cast<std::size_t>(i)] / 2;
        a1[static_cast<std::size_t>(i)] =
            q[static_cast<std::size_t>(i)] + dir[static_cast<std::size_t>(i)] / 2;
    }
    t.paths.push_back({a0, a1});
    t.paths.push_back({sim(a0), sim(a1)});

    // The similarity pairs every system-A event with a system-B event at the
    // same moment, so two-letter events abound; each must decompose into
    // disjoint supports emitted in lexicographic order, and one of them
    // brackets the rational crossing time 1/2.
    const auto events = trace_events(t);
    bool straddles_half = false;
    for (const auto& e : events) {
        if (e.letters.size() != 2) continue;
        if (e.bracket_lo < Rational(1, 2) && Rational(1, 2) < e.bracket_hi)
            straddles_half = true;
        std::set<int> s0(e.letters[0].p.begin(), e.letters[0].p.end());
        s0.insert(e.letters[0].q.begin(), e.letters[0].q.end());
        std::set<int> s1(e.letters[1].p.begin(), e.letters[1].p.end());
        s1.insert(e.letters[1].q.begin(), e.letters[1].q.end());
        for (int v : s0) CHECK(s1.count(v) == 0);
        CHECK(*s0.begin() < *s1.begin());
    }
    CHECK(straddles_half);
}

TEST_CASE("correlated movers hit an unresolvable codimension-2 crossing") {
    // Without the rotation the mixed inter-cluster events of the two movers
    // coincide with overlapping supports; trace must report the bracket.
    const Trajectory t = twin_cluster_scene(false);
    CHECK_THROWS_AS(trace(t), unresolved_event);
}

TEST_CASE("diff_move across several events is not a single move") {
    const Trajectory t = twin_cluster_scene(true);
    const Triangulation t0 = triangulation_at(t, Rational(0));
    const Triangulation t1 = triangulation_at(t, Rational(1));
    CHECK_THROWS_AS(diff_move(t0, t1), not_single_move);
}

namespace {

Point ring_point(const Rational& t, const Rational& rho, const Rational& h) {
    // angle theta with tan(theta/2) = t, on the horizontal circle of radius
    // rho at height h; lands exactly on the unit sphere when rho^2 + h^2 = 1
    const Rational s = 1 + t * t;
    return {rho * (1 - t * t) / s, rho * 2 * t / s, h};
}

// A small square loop in the radial-perturbation plane around a configuration
// of six points lying exactly on the unit sphere. The loop encircles the
// codimension-2 stratum where all six are cospherical, so its trace is the
// hexagon relator of the polytope type.
Trajectory stratum_loop(const std::vector<Rational>& top_params) {
    Configuration c;
    c.dim = 3;
    const Rational rho(4, 5), hb(-3, 5), ht(3, 5);
    c.points = {ring_point(Rational(0), rho, hb), ring_point(Rational(7, 4), rho, hb),
                ring_point(Rational(-7, 4), rho, hb)};
    for (const auto& t : top_params) c.points.push_back(ring_point(t, rho, ht));
    const GaleVectors gv = gale_transform(c);

    Trajectory traj;
    traj.dim = 3;
    traj.closed = true;
    traj.times = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    traj.paths.assign(6, {});
    const Rational eps(1, 1000000);
    const std::vector<std::pair<int, int>> corners = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    for (auto [dx, dy] : corners) {
        for (int i = 1; i <= 6; ++i) {
            const Point y = gv.vector_of(i);
            const Rational delta = eps * (Rational(dx) * y[0] + Rational(dy) * y[1]);
            Point q = c.at(i);
            for (auto& coord : q) coord *= (1 + delta);
            traj.paths[static_cast<std::size_t>(i - 1)].push_back(q);
        }
    }
    return traj;
}

bool cyclically_matches_diagram(const Word& w, const StandardGaleDiagram& diagram) {
    auto canon_word = [](const Word& word) {
        Word out;
        for (const auto& l : word) out.push_back(canonicalize(l, Flavor::plain));
        return out;
    };
    auto cyc_eq = [&](const Word& a, const Word& b) {
        if (a.size() != b.size()) return false;
        const Word cb = canon_word(b);
        for (const Word& base : {a, inverse(a)}) {
            const Word ca = canon_word(base);
            for (std::size_t r = 0; r < ca.size(); ++r) {
                Word rot(ca.begin() + static_cast<long>(r), ca.end());
                rot.insert(rot.end(), ca.begin(), ca.begin() + static_cast<long>(r));
                if (rot == cb) return true;
            }
        }
        return false;
    };
    std::vector<int> m = {1, 2, 3, 4, 5, 6};
    do {
        if (cyc_eq(w, relation_word(diagram, m))) return true;
    } while (std::next_permutation(m.begin(), m.end()));
    return false;
}

} // namespace

TEST_CASE("a loop around a cospherical stratum traces to a hexagon relator") {
    const auto d6 = enumerate_standard_diagrams(6);

    // Top ring twisted to realize the octahedron type.
    const Trajectory octa =
        stratum_loop({Rational(2, 9), Rational(16, 5), Rational(-12, 11)});
    const Word w_octa = trace(octa);
    CHECK(w_octa.size() == 6);
    CHECK(psi(w_octa, 6, 3).is_zero());
    CHECK_FALSE(is_nontrivial_ab_z2(w_octa, Presentation(6, 5, Flavor::plain)));
    CHECK(cyclically_matches_diagram(w_octa, d6[1]));
    CHECK_FALSE(cyclically_matches_diagram(w_octa, d6[0]));

    // A different twist realizes the shifted octahedron.
    const Trajectory shifted =
        stratum_loop({Rational(1, 12), Rational(9, 4), Rational(-13, 6)});
    const Word w_shifted = trace(shifted);
    CHECK(w_shifted.size() == 6);
    CHECK(psi(w_shifted, 6, 3).is_zero());
    CHECK_FALSE(is_nontrivial_ab_z2(w_shifted, Presentation(6, 5, Flavor::plain)));
    CHECK(cyclically_matches_diagram(w_shifted, d6[0]));
    CHECK_FALSE(cyclically_matches_diagram(w_shifted, d6[1]));
}

TEST_CASE("degenerate breakpoint is reported") {
    Trajectory t;
    t.dim = 2;
    t.closed = false;
    t.times = {Rational(0), Rational(1)};
    // Cocircular square at t=0.
    const std::vector<Point> start = {{Rational(1), Rational(0)},
                                      {Rational(0), Rational(1)},
                                      {Rational(-1), Rational(0)},
                                      {Rational(0), Rational(-1)}};
    const std::vector<Point> end = {{Rational(2), Rational(0)},
                                    {Rational(0), Rational(1)},
                                    {Rational(-1), Rational(0)},
                                    {Rational(0), Rational(-1)}};
    for (std::size_t i = 0; i < start.size(); ++i) t.paths.push_back({start[i], end[i]});
    CHECK_THROWS_AS(trace(t), degenerate_endpoint);
}
