#ifndef PACHNER_FLIPGRAPH_HPP
#define PACHNER_FLIPGRAPH_HPP

#include "pachner/delaunay.hpp"
#include "pachner/groups.hpp"
#include "pachner/word.hpp"

#include <string>
#include <vector>

namespace pachner {

using HeightFunction = std::vector<Rational>;

// Lower-hull triangulation T(X, h) for an arbitrary height function.
Triangulation regular_triangulation(const Configuration& config, const HeightFunction& h);

struct FlipEdge {
    int u = 0;
    int v = 0;
    Letter letter;    // move turning vertex u into vertex v
    bool tree = false; // BFS discovery edge
};

// Flip graph of a planar convex-position configuration: vertices are the
// triangulations, edges diagonal exchanges. BFS from the Delaunay
// triangulation with lexicographic tie-breaking, so vertex numbering, edges
// and phi words are deterministic.
struct FlipGraph {
    Configuration config;
    std::vector<Triangulation> vertices; // vertex 0 is the Delaunay base
    std::vector<FlipEdge> edges;
    std::vector<int> bfs_parent;      // -1 for the base vertex
    std::vector<Letter> bfs_letter;   // move from parent to vertex

    int index_of(const Triangulation& t) const; // throws unknown_vertex
};

FlipGraph flip_graph(const Configuration& config);

// Product of edge letters along the BFS-tree path from the base to t.
Word phi_word(const FlipGraph& graph, const Triangulation& t);

// Z2 chain carrying the simplex label sets of the triangulation.
Chain chain_of(const Triangulation& tri);

// Checks the embedding of the flip graph into the Cayley graph at the
// computable level: psi(phi(T)) = c(T) + c(T0) for every vertex, chains are
// pairwise distinct, and every non-tree cycle word has zero psi image and an
// abelianized image inside the relator span.
bool verify_embedding(const FlipGraph& graph);

// DOT export, vertices labeled by simplex sets, edges by move letters.
std::string to_dot(const FlipGraph& graph);

} // namespace pachner

#endif
