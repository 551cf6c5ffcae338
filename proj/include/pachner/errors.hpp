#ifndef PACHNER_ERRORS_HPP
#define PACHNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pachner {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs with inconsistent dimensions or the wrong number of points.
struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& msg) : error(msg) {}
};

// A simplex that should be full-dimensional is flat.
struct degenerate_simplex : error {
    explicit degenerate_simplex(const std::string& msg) : error(msg) {}
};

// d+2 cospherical points on a lower-hull facet: the triangulation is not unique.
struct degenerate_configuration : error {
    explicit degenerate_configuration(const std::string& msg) : error(msg) {}
};

// d+1 points on a (d-2)-sphere: excluded from the configuration space.
struct excluded_configuration : error {
    explicit excluded_configuration(const std::string& msg) : error(msg) {}
};

// A lower-hull face with more than d+1 vertices for the given heights.
struct degenerate_lift : error {
    explicit degenerate_lift(const std::string& msg) : error(msg) {}
};

// Triangulation difference is not a single bistellar move.
struct not_single_move : error {
    explicit not_single_move(const std::string& msg) : error(msg) {}
};

// A time bracket at minimum resolution still does not resolve into moves.
struct unresolved_event : error {
    unresolved_event(const std::string& msg, std::string lo, std::string hi)
        : error(msg), bracket_lo(std::move(lo)), bracket_hi(std::move(hi)) {}
    std::string bracket_lo, bracket_hi;
};

// Trajectory breakpoint configuration is degenerate.
struct degenerate_endpoint : error {
    explicit degenerate_endpoint(const std::string& msg) : error(msg) {}
};

struct rank_deficient : error {
    explicit rank_deficient(const std::string& msg) : error(msg) {}
};

struct bad_arity : error {
    explicit bad_arity(const std::string& msg) : error(msg) {}
};

struct bad_params : error {
    explicit bad_params(const std::string& msg) : error(msg) {}
};

struct not_convex_position : error {
    explicit not_convex_position(const std::string& msg) : error(msg) {}
};

struct not_planar : error {
    explicit not_planar(const std::string& msg) : error(msg) {}
};

struct unknown_vertex : error {
    explicit unknown_vertex(const std::string& msg) : error(msg) {}
};

// Malformed input files or word strings.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace pachner

#endif
