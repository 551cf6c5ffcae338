#include "pachner/io.hpp"

#include "pachner/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace pachner {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw parse_error("expected integer or rational string, got " + j.dump());
}

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return json(q.get_num().get_si());
    return json(to_string(q));
}

Point point_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw parse_error("point must be an array of dim coordinates");
    Point p;
    for (const auto& c : j) p.push_back(rational_from_json(c));
    return p;
}

json parse_checked(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

} // namespace

Configuration configuration_from_json(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.contains("dim") || !j.contains("points"))
        throw parse_error("configuration needs \"dim\" and \"points\"");
    Configuration config;
    config.dim = j["dim"].get<int>();
    for (const auto& p : j["points"]) config.points.push_back(point_from_json(p, config.dim));
    config.validate();
    return config;
}

std::string configuration_to_json(const Configuration& config) {
    json j;
    j["dim"] = config.dim;
    j["points"] = json::array();
    for (const auto& p : config.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(rational_to_json(c));
        j["points"].push_back(row);
    }
    return j.dump(2) + "\n";
}

Triangulation triangulation_from_json(const std::string& text, int dim, int n) {
    const json j = parse_checked(text);
    if (!j.contains("simplices")) throw parse_error("triangulation needs \"simplices\"");
    Triangulation tri;
    tri.dim = dim;
    tri.n = n;
    for (const auto& s : j["simplices"]) {
        std::vector<int> labels;
        for (const auto& l : s) labels.push_back(l.get<int>());
        tri.simplices.insert(Simplex(std::move(labels)));
    }
    return tri;
}

std::string triangulation_to_json(const Triangulation& tri) {
    json j;
    j["simplices"] = json::array();
    for (const auto& s : tri.simplices) j["simplices"].push_back(s.labels);
    return j.dump(2) + "\n";
}

Trajectory trajectory_from_json(const std::string& text) {
    const json j = parse_checked(text);
    for (const char* key : {"dim", "closed", "times", "paths"})
        if (!j.contains(key)) throw parse_error(std::string("trajectory needs \"") + key + "\"");
    Trajectory traj;
    traj.dim = j["dim"].get<int>();
    traj.closed = j["closed"].get<bool>();
    for (const auto& t : j["times"]) traj.times.push_back(rational_from_json(t));
    for (const auto& path : j["paths"]) {
        std::vector<Point> positions;
        for (const auto& p : path) positions.push_back(point_from_json(p, traj.dim));
        traj.paths.push_back(std::move(positions));
    }
    traj.validate();
    return traj;
}

std::string trajectory_to_json(const Trajectory& traj) {
    json j;
    j["dim"] = traj.dim;
    j["closed"] = traj.closed;
    j["times"] = json::array();
    for (const auto& t : traj.times) j["times"].push_back(rational_to_json(t));
    j["paths"] = json::array();
    for (const auto& path : traj.paths) {
        json jpath = json::array();
        for (const auto& p : path) {
            json row = json::array();
            for (const auto& c : p) row.push_back(rational_to_json(c));
            jpath.push_back(row);
        }
        j["paths"].push_back(jpath);
    }
    return j.dump(2) + "\n";
}

StandardGaleDiagram diagram_from_json(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.contains("order") || !j.contains("slots"))
        throw parse_error("diagram needs \"order\" and \"slots\"");
    StandardGaleDiagram d;
    d.order = j["order"].get<int>();
    for (const auto& s : j["slots"]) d.slots.push_back(s.get<int>());
    return d;
}

std::string diagram_to_json(const StandardGaleDiagram& diagram) {
    json j;
    j["order"] = diagram.order;
    j["slots"] = diagram.slots;
    return j.dump() + "\n";
}

std::string gale_vectors_to_json(const GaleVectors& gv) {
    json j;
    j["n"] = gv.n;
    j["gdim"] = gv.gdim;
    j["rows"] = json::array();
    for (const auto& row : gv.b) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_to_json(x));
        j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
}

std::string flip_graph_to_json(const FlipGraph& graph) {
    json j;
    j["vertices"] = json::array();
    for (const auto& t : graph.vertices) {
        json v = json::array();
        for (const auto& s : t.simplices) v.push_back(s.labels);
        j["vertices"].push_back(v);
    }
    j["edges"] = json::array();
    for (const auto& e : graph.edges)
        j["edges"].push_back(json::array({e.u, e.v, to_string(e.letter)}));
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file " + path);
    out << content;
}

} // namespace pachner
