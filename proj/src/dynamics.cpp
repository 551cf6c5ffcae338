#include "pachner/dynamics.hpp"

#include "pachner/errors.hpp"
#include "pachner/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace pachner {

void Trajectory::validate() const {
    if (dim < 1) throw dimension_mismatch("trajectory: dim must be positive");
    if (times.size() < 2) throw dimension_mismatch("trajectory: need at least two breakpoints");
    if (times.front() != 0 || times.back() != 1)
        throw dimension_mismatch("trajectory: times must run from 0 to 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i - 1] < times[i]))
            throw dimension_mismatch("trajectory: times must increase strictly");
    if (paths.empty()) throw dimension_mismatch("trajectory: no points");
    for (const auto& path : paths) {
        if (path.size() != times.size())
            throw dimension_mismatch("trajectory: one position per breakpoint required");
        for (const auto& p : path)
            if (static_cast<int>(p.size()) != dim)
                throw dimension_mismatch("trajectory: point dimension mismatch");
    }
    if (closed)
        for (const auto& path : paths)
            if (path.front() != path.back())
                throw dimension_mismatch("trajectory: closed loop must return to the start");
}

Configuration Trajectory::at(const Rational& t) const {
    if (t < 0 || t > 1) throw bad_params("trajectory: time outside [0,1]");
    std::size_t seg = 0;
    while (seg + 2 < times.size() && t >= times[seg + 1]) ++seg;
    const Rational t0 = times[seg], t1 = times[seg + 1];
    const Rational alpha = (t - t0) / (t1 - t0);
    Configuration config;
    config.dim = dim;
    for (const auto& path : paths) {
        Point p(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            const Rational& a = path[seg][static_cast<std::size_t>(j)];
            const Rational& b = path[seg + 1][static_cast<std::size_t>(j)];
            p[static_cast<std::size_t>(j)] = a + alpha * (b - a);
        }
        config.points.push_back(std::move(p));
    }
    return config;
}

Rational default_resolution() {
    Rational r(1, 1);
    r /= Rational(Integer(1) << 32);
    return r;
}

Triangulation triangulation_at(const Trajectory& traj, const Rational& t) {
    traj.validate();
    return delaunay(traj.at(t));
}

Letter diff_move(const Triangulation& t1, const Triangulation& t2) {
    if (t1.dim != t2.dim || t1.n != t2.n)
        throw not_single_move("diff_move: triangulations over different configurations");
    if (t1 == t2) throw not_single_move("diff_move: triangulations are equal");

    std::vector<Simplex> removed, added;
    std::set_difference(t1.simplices.begin(), t1.simplices.end(), t2.simplices.begin(),
                        t2.simplices.end(), std::back_inserter(removed));
    std::set_difference(t2.simplices.begin(), t2.simplices.end(), t1.simplices.begin(),
                        t1.simplices.end(), std::back_inserter(added));

    std::set<int> support;
    for (const auto& s : removed) support.insert(s.labels.begin(), s.labels.end());
    for (const auto& s : added) support.insert(s.labels.begin(), s.labels.end());
    if (static_cast<int>(support.size()) != t1.dim + 2)
        throw not_single_move("diff_move: changed simplices span " +
                              std::to_string(support.size()) + " labels, expected d+2");

    const std::vector<int> k(support.begin(), support.end());
    std::set<Simplex> removed_set(removed.begin(), removed.end());
    std::set<Simplex> added_set(added.begin(), added.end());
    std::vector<int> p, q;
    for (int cand : k) {
        std::vector<int> facet;
        for (int v : k)
            if (v != cand) facet.push_back(v);
        const Simplex s{facet};
        const bool in_removed = removed_set.count(s) > 0;
        const bool in_added = added_set.count(s) > 0;
        if (in_removed && in_added) throw not_single_move("diff_move: inconsistent fans");
        if (in_removed) p.push_back(cand);
        if (in_added) q.push_back(cand);
    }
    if (p.size() + q.size() != k.size() || p.size() < 2 || q.size() < 2)
        throw not_single_move("diff_move: difference is not a bistellar fan swap");
    if (removed_set.size() != p.size() || added_set.size() != q.size())
        throw not_single_move("diff_move: extra simplices beyond the fans");
    return canonicalize(Letter(p, q, 1), Flavor::plain);
}

namespace {

struct TraceState {
    const Trajectory* traj;
    Rational resolution;

    Triangulation tri_at(const Rational& t) const { return delaunay(traj->at(t)); }
};

// Split fractions tried in turn when a sample time happens to be singular.
const Rational* split_fractions() {
    static const Rational fr[] = {Rational(1, 2),  Rational(13, 29), Rational(15, 31),
                                  Rational(23, 47), Rational(27, 59), Rational(31, 61),
                                  Rational(37, 73), Rational(41, 83)};
    return fr;
}
constexpr int kSplitCount = 8;

// Decomposes the symmetric difference into label-connected components; each
// component must be a single bistellar move or a lone boundary simplex.
std::vector<Letter> resolve_bracket(const Triangulation& ta, const Triangulation& tb,
                                    const Rational& lo, const Rational& hi) {
    std::vector<Simplex> changed;
    std::set_difference(ta.simplices.begin(), ta.simplices.end(), tb.simplices.begin(),
                        tb.simplices.end(), std::back_inserter(changed));
    const std::size_t removed_count = changed.size();
    std::set_difference(tb.simplices.begin(), tb.simplices.end(), ta.simplices.begin(),
                        ta.simplices.end(), std::back_inserter(changed));

    // Union-find over changed simplices, connected when sharing a label.
    std::vector<int> parent(changed.size());
    for (std::size_t i = 0; i < changed.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (std::size_t i = 0; i < changed.size(); ++i)
        for (std::size_t j = i + 1; j < changed.size(); ++j) {
            bool shares = false;
            for (int v : changed[i].labels)
                if (std::binary_search(changed[j].labels.begin(), changed[j].labels.end(), v)) {
                    shares = true;
                    break;
                }
            if (shares) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] =
                            find(static_cast<int>(j));
        }

    std::map<int, std::pair<std::set<Simplex>, std::set<Simplex>>> components;
    for (std::size_t i = 0; i < changed.size(); ++i) {
        auto& comp = components[find(static_cast<int>(i))];
        (i < removed_count ? comp.first : comp.second).insert(changed[i]);
    }

    std::vector<Letter> letters;
    for (auto& [root, comp] : components) {
        const auto& [rem, add] = comp;
        if (rem.size() + add.size() == 1) continue; // boundary apparition, no letter
        Triangulation part_a{ta.dim, ta.n, rem};
        Triangulation part_b{ta.dim, ta.n, add};
        try {
            letters.push_back(diff_move(part_a, part_b));
        } catch (const not_single_move& e) {
            throw unresolved_event(std::string("trace: bracket does not resolve into moves: ") +
                                       e.what(),
                                   to_string(lo), to_string(hi));
        }
    }
    std::sort(letters.begin(), letters.end(), [](const Letter& a, const Letter& b) {
        return std::tie(a.p, a.q, a.exponent) < std::tie(b.p, b.q, b.exponent);
    });
    return letters;
}

void bisect(TraceState& st, const Rational& lo, const Rational& hi, const Triangulation& ta,
            const Triangulation& tb, std::vector<PachnerEvent>& out) {
    if (ta == tb) return; // no net change; sub-resolution double events cancel freely
    if (hi - lo < st.resolution) {
        out.push_back({lo, hi, resolve_bracket(ta, tb, lo, hi)});
        return;
    }
    // A split sample can hit a singular time exactly; try other fractions.
    for (int attempt = 0; attempt < kSplitCount; ++attempt) {
        const Rational mid = lo + (hi - lo) * split_fractions()[attempt];
        try {
            const Triangulation tm = st.tri_at(mid);
            bisect(st, lo, mid, ta, tm, out);
            bisect(st, mid, hi, tm, tb, out);
            return;
        } catch (const degenerate_configuration&) {
        } catch (const excluded_configuration&) {
        }
    }
    throw unresolved_event("trace: every split sample in the bracket is singular",
                           to_string(lo), to_string(hi));
}

} // namespace

std::vector<PachnerEvent> trace_events(const Trajectory& traj, const Rational& resolution) {
    traj.validate();
    if (sign_of(resolution) <= 0) throw bad_params("trace: resolution must be positive");
    TraceState st{&traj, resolution};

    std::vector<Triangulation> at_breakpoints;
    for (const auto& t : traj.times) {
        try {
            at_breakpoints.push_back(st.tri_at(t));
        } catch (const degenerate_configuration& e) {
            throw degenerate_endpoint(std::string("trace: breakpoint configuration at t=") +
                                      to_string(t) + " is singular: " + e.what());
        } catch (const excluded_configuration& e) {
            throw degenerate_endpoint(std::string("trace: breakpoint configuration at t=") +
                                      to_string(t) + " is excluded: " + e.what());
        }
    }

    std::vector<PachnerEvent> events;
    for (std::size_t seg = 0; seg + 1 < traj.times.size(); ++seg)
        bisect(st, traj.times[seg], traj.times[seg + 1], at_breakpoints[seg],
               at_breakpoints[seg + 1], events);
    return events;
}

Word trace(const Trajectory& traj, const Rational& resolution) {
    Word word;
    for (const auto& event : trace_events(traj, resolution))
        word.insert(word.end(), event.letters.begin(), event.letters.end());
    return word;
}

Trajectory perturb(const Trajectory& traj, std::uint64_t seed, const Rational& magnitude) {
    traj.validate();
    if (sign_of(magnitude) < 0) throw bad_params("perturb: magnitude must be nonnegative");
    Trajectory out = traj;
    SplitMix64 rng(seed);
    for (auto& path : out.paths)
        for (std::size_t bp = 1; bp + 1 < path.size(); ++bp)
            for (auto& coord : path[bp]) coord += rng.next_unit() * magnitude;
    return out;
}

} // namespace pachner
