#ifndef PACHNER_IO_HPP
#define PACHNER_IO_HPP

#include "pachner/delaunay.hpp"
#include "pachner/dynamics.hpp"
#include "pachner/flipgraph.hpp"
#include "pachner/gale.hpp"

#include <string>

namespace pachner {

// Configuration: {"dim": d, "points": [[x, "p/q", ...], ...]}
Configuration configuration_from_json(const std::string& text);
std::string configuration_to_json(const Configuration& config);

// Triangulation: {"simplices": [[1,2,3], ...]} (1-based, sorted)
Triangulation triangulation_from_json(const std::string& text, int dim, int n);
std::string triangulation_to_json(const Triangulation& tri);

// Trajectory: {"dim": d, "closed": b, "times": [...], "paths": [[[...], ...], ...]}
Trajectory trajectory_from_json(const std::string& text);
std::string trajectory_to_json(const Trajectory& traj);

// Standard Gale diagram: {"order": l, "slots": [...]}
StandardGaleDiagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const StandardGaleDiagram& diagram);

// Gale transform output: {"n":, "gdim":, "rows": [[...], ...]}
std::string gale_vectors_to_json(const GaleVectors& gv);

// Flip graph: {"vertices": [[[1,2,3],...], ...], "edges": [[u, v, "a[..|..]"], ...]}
std::string flip_graph_to_json(const FlipGraph& graph);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pachner

#endif
