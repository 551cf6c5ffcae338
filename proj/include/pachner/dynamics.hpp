#ifndef PACHNER_DYNAMICS_HPP
#define PACHNER_DYNAMICS_HPP

#include "pachner/delaunay.hpp"
#include "pachner/word.hpp"

#include <cstdint>
#include <vector>

namespace pachner {

// Piecewise-linear motion of n labeled points. paths[i][j] is the position of
// point i+1 at breakpoint time times[j]; positions between breakpoints are
// linear interpolations, evaluated in exact rational arithmetic.
struct Trajectory {
    int dim = 0;
    bool closed = false;
    std::vector<Rational> times; // strictly increasing, first 0, last 1
    std::vector<std::vector<Point>> paths;

    int n() const { return static_cast<int>(paths.size()); }
    int breakpoints() const { return static_cast<int>(times.size()); }
    void validate() const;
    Configuration at(const Rational& t) const;
};

// Default bisection resolution 2^-32; far below the event spacing of any
// desk-scale scene, user-overridable.
Rational default_resolution();

// A combinatorial change isolated inside a time bracket narrower than the
// trace resolution. Boundary apparitions carry no letters; coincident
// independent flips carry several, in lexicographic order.
struct PachnerEvent {
    Rational bracket_lo, bracket_hi;
    std::vector<Letter> letters;
};

// Delaunay triangulation of the interpolated configuration.
Triangulation triangulation_at(const Trajectory& traj, const Rational& t);

// Identifies the bistellar move turning t1 into t2: removed simplices must be
// the fan T_P, added the fan T_Q, over one (d+2)-label support. Throws
// not_single_move otherwise.
Letter diff_move(const Triangulation& t1, const Triangulation& t2);

// All Pachner events in (0, 1), found by sampling at breakpoints and
// bisecting every combinatorial change down to brackets narrower than
// `resolution`, in time order.
std::vector<PachnerEvent> trace_events(const Trajectory& traj,
                                       const Rational& resolution = default_resolution());

// The move word of the trajectory: the letters of trace_events in order.
Word trace(const Trajectory& traj, const Rational& resolution = default_resolution());

// Deterministically jittered copy: interior breakpoints move by rationals of
// size at most `magnitude`; the endpoint configurations are kept exactly.
Trajectory perturb(const Trajectory& traj, std::uint64_t seed,
                   const Rational& magnitude = Rational(1, 1024));

} // namespace pachner

#endif
