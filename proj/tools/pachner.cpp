// Command-line front end: Delaunay triangulations, trajectory tracing, Gale
// diagram enumeration, group presentations, abelianization ranks and flip
// graphs, over exact rational arithmetic.

#include <CLI11.hpp>

#include "pachner/dynamics.hpp"
#include "pachner/errors.hpp"
#include "pachner/flipgraph.hpp"
#include "pachner/gale.hpp"
#include "pachner/groups.hpp"
#include "pachner/io.hpp"

#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace pachner;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

int run_delaunay(const std::string& in, const std::string& out) {
    const Configuration config = configuration_from_json(read_file(in));
    const Triangulation tri = delaunay(config);
    emit(out, triangulation_to_json(tri));
    const bool ok = is_delaunay(config, tri);
    std::cerr << "oracle: " << (ok ? "verified" : "FAILED") << "\n";
    return ok ? 0 : 2;
}

int run_trace(const std::string& in, const std::string& res_text, bool check,
              const std::string& out) {
    const Trajectory traj = trajectory_from_json(read_file(in));
    const Rational res = res_text.empty() ? default_resolution() : parse_rational(res_text);
    const Word w = trace(traj, res);
    std::ostringstream os;
    os << to_string(w) << "\n";
    if (check) {
        const int n = traj.n();
        const int d = traj.dim;
        os << "psi: " << psi(w, n, d).str() << "\n";
        GeneratorIndex gens(n, d + 2, Flavor::plain);
        const BitRow row = abelianized_row(w, gens);
        os << "ab-image: ";
        if (Z2Echelon::is_zero(row)) {
            os << "0";
        } else {
            const auto list = generators(n, d + 2, Flavor::plain);
            bool first = true;
            for (std::size_t i = 0; i < list.size(); ++i)
                if (row[i / 64] & (1ULL << (i % 64))) {
                    if (!first) os << " + ";
                    first = false;
                    os << to_string(list[i]);
                }
        }
        os << "\n";
    }
    emit(out, os.str());
    return 0;
}

int run_gale_transform(const std::string& in, const std::string& out) {
    const Configuration config = configuration_from_json(read_file(in));
    emit(out, gale_vectors_to_json(gale_transform(config)));
    return 0;
}

int run_gale_diagrams(int order, const std::string& out) {
    std::ostringstream os;
    for (const auto& d : enumerate_standard_diagrams(order)) os << diagram_to_json(d);
    emit(out, os.str());
    return 0;
}

std::vector<int> parse_labels_csv(const std::string& csv) {
    std::vector<int> labels;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) labels.push_back(std::stoi(item));
    return labels;
}

int run_gale_relation(int order, const std::string& labels_csv, int index, bool oriented,
                      const std::string& policy, const std::string& out) {
    const auto diagrams = enumerate_standard_diagrams(order);
    std::vector<int> labels;
    if (labels_csv.empty())
        for (int i = 1; i <= order; ++i) labels.push_back(i);
    else
        labels = parse_labels_csv(labels_csv);
    std::ostringstream os;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        if (index >= 0 && static_cast<std::size_t>(index) != i) continue;
        const Word w = oriented
                           ? oriented_relation_word(diagrams[i], labels, parse_policy(policy))
                           : relation_word(diagrams[i], labels);
        os << "diagram " << i << " slots=[";
        for (std::size_t j = 0; j < diagrams[i].slots.size(); ++j)
            os << (j ? "," : "") << diagrams[i].slots[j];
        os << "]: " << to_string(w) << "\n";
    }
    emit(out, os.str());
    return 0;
}

int run_group_presentation(int n, int k, bool oriented, const std::string& policy,
                           bool involutive, const std::string& out) {
    Presentation pres(n, k, oriented ? Flavor::oriented : Flavor::plain,
                      parse_policy(policy));
    pres.involutive_pack = involutive;
    std::ostringstream os;
    const auto gens = pres.generator_list();
    os << "generators " << gens.size() << "\n";
    for (const auto& g : gens) os << to_string(g) << "\n";
    std::set<std::string> seen;
    std::vector<std::string> relators;
    pres.for_each_relator([&](const Word& w) {
        Word canon;
        for (const auto& l : w) canon.push_back(canonicalize(l, pres.flavor));
        const std::string s = to_string(canon);
        if (seen.insert(s).second) relators.push_back(s);
    });
    os << "relators " << relators.size() << "\n";
    for (const auto& r : relators) os << r << "\n";
    emit(out, os.str());
    return 0;
}

int run_group_abrank(int n, int k, bool oriented, const std::string& policy,
                     const std::string& out) {
    Presentation pres(n, k, oriented ? Flavor::oriented : Flavor::plain,
                      parse_policy(policy));
    std::ostringstream os;
    os << "generators=" << pres.generator_list().size()
       << " relators=" << pres.gon_relator_count()
       << " rank=" << abelianization_rank_z2(pres) << "\n";
    emit(out, os.str());
    return 0;
}

int run_group_check_word(int n, int k, bool oriented, const std::string& policy,
                         const std::string& word_text, const std::string& out) {
    Presentation pres(n, k, oriented ? Flavor::oriented : Flavor::plain,
                      parse_policy(policy));
    const Word w = parse_word(word_text);
    for (const auto& l : w) check_letter(l, n, k);
    const int base = abelianization_rank_z2(pres);
    const int with = abelianization_rank_z2(pres, {w});
    std::ostringstream os;
    if (with > base)
        os << "nontrivial (rank " << base << "->" << with << ")\n";
    else
        os << "trivial (rank " << base << "->" << with << ")\n";
    emit(out, os.str());
    return 0;
}

int run_flipgraph(const std::string& in, bool dot, bool verify, const std::string& out) {
    const Configuration config = configuration_from_json(read_file(in));
    const FlipGraph g = flip_graph(config);
    if (verify) {
        const bool ok = verify_embedding(g);
        std::cerr << "embedding: " << (ok ? "verified" : "FAILED") << "\n";
        if (!ok) return 2;
    }
    emit(out, dot ? to_dot(g) : flip_graph_to_json(g));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delaunay triangulations, Pachner-move words and their group certificates"};
    app.require_subcommand(1);

    std::string in_path, out_path, resolution, labels_csv, word_text;
    std::string policy = "geometric";
    bool check = false, oriented = false, involutive = false, dot = false, verify = false;
    int order = 5, n = 6, k = 5, index = -1;

    auto* cmd_delaunay =
        app.add_subcommand("delaunay", "Delaunay triangulation of a configuration");
    cmd_delaunay->add_option("config", in_path, "configuration JSON file")->required();
    cmd_delaunay->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_trace = app.add_subcommand("trace", "trace Pachner events along a trajectory");
    cmd_trace->add_option("trajectory", in_path, "trajectory JSON file")->required();
    cmd_trace->add_option("--resolution", resolution, "bisection resolution (rational)");
    cmd_trace->add_flag("--check", check, "also print psi and abelianized images");
    cmd_trace->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cmd_gale = app.add_subcommand("gale", "Gale transforms and standard diagrams");
    cmd_gale->require_subcommand(1);
    auto* gale_transform_cmd =
        cmd_gale->add_subcommand("transform", "Gale transform of a configuration");
    gale_transform_cmd->add_option("config", in_path, "configuration JSON file")->required();
    gale_transform_cmd->add_option("-o,--output", out_path, "output file");
    auto* gale_diagrams_cmd =
        cmd_gale->add_subcommand("diagrams", "standard Gale diagrams of an order");
    gale_diagrams_cmd->add_option("--order", order, "diagram order (>= 5)")->required();
    gale_diagrams_cmd->add_option("-o,--output", out_path, "output file");
    auto* gale_relation_cmd =
        cmd_gale->add_subcommand("relation", "gon relation words of an order");
    gale_relation_cmd->add_option("--order", order, "diagram order (>= 5)")->required();
    gale_relation_cmd->add_option("--labels", labels_csv,
                                  "comma-separated labels (default 1..order)");
    gale_relation_cmd->add_option("--index", index, "only this diagram index");
    gale_relation_cmd->add_flag("--oriented", oriented, "attach cyclic orientations");
    gale_relation_cmd->add_option("--policy", policy,
                                  "orientation policy (geometric|circular|sorted)");
    gale_relation_cmd->add_option("-o,--output", out_path, "output file");

    auto* cmd_group = app.add_subcommand("group", "presentations and Z2 certificates");
    cmd_group->require_subcommand(1);
    auto* group_pres = cmd_group->add_subcommand("presentation", "list generators and relators");
    auto* group_abrank = cmd_group->add_subcommand("abrank", "Z2 abelianization rank");
    auto* group_check = cmd_group->add_subcommand("check-word", "word nontriviality certificate");
    for (auto* sub : {group_pres, group_abrank, group_check}) {
        sub->add_option("-n", n, "number of labels")->required();
        sub->add_option("-k", k, "letter support size")->required();
        sub->add_flag("--oriented", oriented, "oriented groups");
        sub->add_option("--policy", policy,
                        "orientation policy (geometric|circular|sorted)");
        sub->add_option("-o,--output", out_path, "output file");
    }
    group_pres->add_flag("--involutive-pack", involutive,
                         "add the k=4 involutive relator pack");
    group_check->add_option("--word", word_text, "word in a[P|Q] format")->required();

    auto* cmd_flip =
        app.add_subcommand("flipgraph", "flip graph of a planar convex configuration");
    cmd_flip->add_option("config", in_path, "configuration JSON file")->required();
    cmd_flip->add_flag("--dot", dot, "DOT output instead of JSON");
    cmd_flip->add_flag("--verify", verify, "check the Cayley-graph embedding");
    cmd_flip->add_option("-o,--output", out_path, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_delaunay)) return run_delaunay(in_path, out_path);
        if (app.got_subcommand(cmd_trace))
            return run_trace(in_path, resolution, check, out_path);
        if (app.got_subcommand(cmd_gale)) {
            if (cmd_gale->got_subcommand(gale_transform_cmd))
                return run_gale_transform(in_path, out_path);
            if (cmd_gale->got_subcommand(gale_diagrams_cmd))
                return run_gale_diagrams(order, out_path);
            return run_gale_relation(order, labels_csv, index, oriented, policy, out_path);
        }
        if (app.got_subcommand(cmd_group)) {
            if (cmd_group->got_subcommand(group_pres))
                return run_group_presentation(n, k, oriented, policy, involutive, out_path);
            if (cmd_group->got_subcommand(group_abrank))
                return run_group_abrank(n, k, oriented, policy, out_path);
            return run_group_check_word(n, k, oriented, policy, word_text, out_path);
        }
        if (app.got_subcommand(cmd_flip)) return run_flipgraph(in_path, dot, verify, out_path);
    } catch (const unresolved_event& e) {
        std::cerr << "error: " << e.what() << " bracket=[" << e.bracket_lo << ", "
                  << e.bracket_hi << "]\n";
        return 3;
    } catch (const degenerate_configuration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const excluded_configuration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_lift& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_simplex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_endpoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_convex_position& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_planar& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
