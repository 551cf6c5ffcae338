#include "pachner/flipgraph.hpp"

#include "pachner/dynamics.hpp"
#include "pachner/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace pachner {

Triangulation regular_triangulation(const Configuration& config, const HeightFunction& h) {
    config.validate();
    Triangulation tri;
    tri.dim = config.dim;
    tri.n = config.n();
    for (auto& s : lower_hull(config, h)) tri.simplices.insert(std::move(s));
    if (tri.simplices.empty())
        throw degenerate_lift("regular_triangulation: no simplicial lower facets");
    return tri;
}

namespace {

// Hull vertices of a planar configuration, strictly convex (collinear middle
// points are not vertices).
std::vector<int> hull_vertices_2d(const Configuration& config) {
    const int n = config.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return config.at(a) < config.at(b); // lexicographic exact comparison
    });
    auto cross_sign = [&](int o, int a, int b) {
        const Point &po = config.at(o), &pa = config.at(a), &pb = config.at(b);
        const Rational c =
            (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
        return sign_of(c);
    };
    auto build = [&](bool upper) {
        std::vector<int> chain;
        for (int idx : order) {
            while (chain.size() >= 2) {
                const int s = cross_sign(chain[chain.size() - 2], chain.back(), idx);
                if (upper ? s >= 0 : s <= 0)
                    chain.pop_back();
                else
                    break;
            }
            chain.push_back(idx);
        }
        return chain;
    };
    std::vector<int> lower = build(false), upper = build(true);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

std::vector<std::pair<std::vector<int>, std::pair<Simplex, Simplex>>> interior_edges(
    const Triangulation& t) {
    std::map<std::vector<int>, std::vector<Simplex>> by_edge;
    for (const auto& s : t.simplices)
        for (std::size_t drop = 0; drop < s.labels.size(); ++drop) {
            std::vector<int> e;
            for (std::size_t i = 0; i < s.labels.size(); ++i)
                if (i != drop) e.push_back(s.labels[i]);
            by_edge[e].push_back(s);
        }
    std::vector<std::pair<std::vector<int>, std::pair<Simplex, Simplex>>> out;
    for (auto& [e, ss] : by_edge)
        if (ss.size() == 2) out.push_back({e, {ss[0], ss[1]}});
    return out;
}

} // namespace

int FlipGraph::index_of(const Triangulation& t) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == t) return static_cast<int>(i);
    throw unknown_vertex("flip graph: triangulation is not a vertex");
}

FlipGraph flip_graph(const Configuration& config) {
    config.validate();
    if (config.dim != 2) throw not_planar("flip_graph: requires d = 2");
    const int n = config.n();
    if (static_cast<int>(hull_vertices_2d(config).size()) != n)
        throw not_convex_position("flip_graph: every point must be a hull vertex");

    FlipGraph g;
    g.config = config;
    std::map<Triangulation, int> seen;

    const Triangulation t0 = delaunay(config);
    g.vertices.push_back(t0);
    g.bfs_parent.push_back(-1);
    g.bfs_letter.emplace_back();
    seen[t0] = 0;

    std::queue<int> frontier;
    frontier.push(0);
    std::set<std::pair<int, int>> recorded;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        const Triangulation current = g.vertices[static_cast<std::size_t>(u)];
        for (const auto& [edge, pair] : interior_edges(current)) {
            // Flip diagonal `edge` of the quad to the opposite one.
            const auto& [s1, s2] = pair;
            std::vector<int> other;
            for (int v : s1.labels)
                if (v != edge[0] && v != edge[1]) other.push_back(v);
            for (int v : s2.labels)
                if (v != edge[0] && v != edge[1]) other.push_back(v);
            Triangulation next = current;
            next.simplices.erase(s1);
            next.simplices.erase(s2);
            next.simplices.insert(Simplex({other[0], other[1], edge[0]}));
            next.simplices.insert(Simplex({other[0], other[1], edge[1]}));

            auto [it, fresh] = seen.try_emplace(next, static_cast<int>(g.vertices.size()));
            const int v = it->second;
            if (fresh) {
                g.vertices.push_back(next);
                g.bfs_parent.push_back(u);
                g.bfs_letter.push_back(diff_move(current, next));
                frontier.push(v);
            }
            const auto key = std::minmax(u, v);
            if (recorded.insert({key.first, key.second}).second)
                g.edges.push_back({u, v, diff_move(current, next), fresh});
        }
    }
    return g;
}

Word phi_word(const FlipGraph& graph, const Triangulation& t) {
    int v = graph.index_of(t);
    Word reversed;
    while (graph.bfs_parent[static_cast<std::size_t>(v)] != -1) {
        reversed.push_back(graph.bfs_letter[static_cast<std::size_t>(v)]);
        v = graph.bfs_parent[static_cast<std::size_t>(v)];
    }
    return Word(reversed.rbegin(), reversed.rend());
}

Chain chain_of(const Triangulation& tri) {
    Chain c;
    c.n = tri.n;
    c.d = tri.dim;
    for (const auto& s : tri.simplices) c.toggle(s.labels);
    return c;
}

bool verify_embedding(const FlipGraph& graph) {
    const int n = graph.config.n();
    const int d = graph.config.dim;
    const Chain c0 = chain_of(graph.vertices[0]);

    std::set<std::set<std::vector<int>>> distinct;
    for (const auto& t : graph.vertices) {
        Chain expected = chain_of(t);
        distinct.insert(expected.support);
        expected += c0;
        const Word w = phi_word(graph, t);
        if (!(psi(w, n, d) == expected)) return false;
    }
    if (distinct.size() != graph.vertices.size()) return false;

    // Non-tree edges close cycles; their words must die under psi and land in
    // the abelianized relator span.
    Presentation pres(n, d + 2, Flavor::plain);
    GeneratorIndex gens(n, d + 2, Flavor::plain);
    Z2Echelon ech(gens.size());
    pres.for_each_gon_relator([&](const Word& w) { ech.add(abelianized_row(w, gens)); });

    for (const auto& e : graph.edges) {
        if (e.tree) continue;
        Word cycle = phi_word(graph, graph.vertices[static_cast<std::size_t>(e.u)]);
        cycle.push_back(e.letter);
        for (const auto& l :
             inverse(phi_word(graph, graph.vertices[static_cast<std::size_t>(e.v)])))
            cycle.push_back(l);
        if (!psi(cycle, n, d).is_zero()) return false;
        if (!Z2Echelon::is_zero(ech.reduce(abelianized_row(cycle, gens)))) return false;
    }
    return true;
}

std::string to_dot(const FlipGraph& graph) {
    std::ostringstream os;
    os << "graph flipgraph {\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"";
        bool first = true;
        for (const auto& s : graph.vertices[i].simplices) {
            if (!first) os << " ";
            first = false;
            for (std::size_t j = 0; j < s.labels.size(); ++j) os << s.labels[j];
        }
        os << "\"];\n";
    }
    for (const auto& e : graph.edges)
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << to_string(e.letter)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace pachner
