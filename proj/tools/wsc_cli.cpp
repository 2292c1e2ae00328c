// Command-line driver: classification, traversal certificates, game
// solving, descent checks, fixed points, audits, generators, and the
// verification suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsc/complex.hpp"
#include "wsc/enumeration.hpp"
#include "wsc/games.hpp"
#include "wsc/generators.hpp"
#include "wsc/io.hpp"
#include "wsc/orderings.hpp"
#include "wsc/recognition.hpp"
#include "wsc/suites.hpp"
#include "wsc/symmetry.hpp"

namespace {

using nlohmann::json;

wsc::GraphFormat parse_format(const std::string& name) {
    if (name == "edge") return wsc::GraphFormat::edge_list;
    if (name == "json") return wsc::GraphFormat::json;
    throw CLI::ValidationError("--format must be 'edge' or 'json'");
}

wsc::Graph read_input(const std::string& path, const std::string& format) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return wsc::parse_graph(buf.str(), parse_format(format));
    }
    return wsc::load_graph(path, parse_format(format));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text << "\n";
    }
}

std::vector<int> parse_id_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::stoi(field));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly bridged graph toolkit"};
    app.require_subcommand(1);

    std::string input = "-", format = "edge", out_path;
    std::uint64_t seed = 1;
    int jobs = 0;
    int dim_cap = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("input", input, "graph file, or '-' for stdin");
        cmd->add_option("--format", format, "graph file format: edge|json")->capture_default_str();
        cmd->add_option("--out", out_path, "write the result here instead of stdout");
        cmd->add_option("--seed", seed, "seed for all randomized pieces")->capture_default_str();
        cmd->add_option("--jobs", jobs, "worker pool size (0 = hardware)")->capture_default_str();
        cmd->add_option("--dim-cap", dim_cap, "cap on enumerated simplex dimension")->capture_default_str();
    };

    // classify
    std::string dot_path;
    auto* classify_cmd = app.add_subcommand("classify", "recognize bridged / weakly bridged graphs");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--dot", dot_path, "export a witness highlight as GraphViz");

    // lexbfs
    int root = 0;
    std::string tie_break = "lowest";
    auto* lexbfs_cmd = app.add_subcommand("lexbfs", "LexBFS traversal certificate");
    add_common(lexbfs_cmd, true);
    lexbfs_cmd->add_option("--root", root, "traversal root")->capture_default_str();
    lexbfs_cmd->add_option("--tie-break", tie_break, "lowest|random")->capture_default_str();

    // dismantle
    std::string order_csv;
    auto* dismantle_cmd = app.add_subcommand("dismantle", "greedy dismantling and order verification");
    add_common(dismantle_cmd, true);
    dismantle_cmd->add_option("--order", order_csv, "comma-separated elimination order to verify");

    // copwin
    auto* copwin_cmd = app.add_subcommand("copwin", "solve the pursuit game");
    add_common(copwin_cmd, true);

    // sdn
    std::string base_csv, mode = "all";
    auto* sdn_cmd = app.add_subcommand("sdn", "simple-descent checks on the clique complex");
    add_common(sdn_cmd, true);
    sdn_cmd->add_option("--base", base_csv, "base simplex, comma-separated (default: every vertex)");
    sdn_cmd->add_option("--mode", mode, "vertex|edge|all")->capture_default_str();

    // fixpoint
    int seed_vertex = 0;
    std::vector<std::string> perm_csv;
    auto* fixpoint_cmd = app.add_subcommand("fixpoint", "group-invariant simplex with certificate");
    add_common(fixpoint_cmd, true);
    fixpoint_cmd->add_option("--seed-vertex", seed_vertex, "orbit seed")->capture_default_str();
    fixpoint_cmd->add_option("--perm", perm_csv,
                             "group generator as a comma-separated image list (repeatable; "
                             "default: full automorphism group)");

    // round-audit
    auto* round_cmd = app.add_subcommand("round-audit", "diameter/radius/roundness audit of a bridged graph");
    add_common(round_cmd, true);

    // generate
    std::string family = "wheel", cls = "weakly_bridged";
    int gen_k = 5, gen_n = 10, gen_layers = 2;
    double gen_p = 0.5;
    std::string power_input;
    auto* gen_cmd = app.add_subcommand("generate", "emit a graph from a named family");
    add_common(gen_cmd, false);
    gen_cmd->add_option("--family", family, "wheel|path|cycle|complete|power|random_filtered|systolic_disk")
        ->capture_default_str();
    gen_cmd->add_option("--k", gen_k, "wheel size / power exponent")->capture_default_str();
    gen_cmd->add_option("--n", gen_n, "vertex count")->capture_default_str();
    gen_cmd->add_option("--p", gen_p, "density parameter")->capture_default_str();
    gen_cmd->add_option("--layers", gen_layers, "disk layers")->capture_default_str();
    gen_cmd->add_option("--class", cls, "bridged|weakly_bridged|weakly_bridged_not_bridged|not_weakly_bridged")
        ->capture_default_str();
    gen_cmd->add_option("--input", power_input, "input graph for --family power");

    // suite
    std::string suite_name = "all";
    auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
    add_common(suite_cmd, false);
    suite_cmd->add_option("name", suite_name, "suite name or 'all'")->capture_default_str();
    bool list_suites = false;
    suite_cmd->add_flag("--list", list_suites, "list suite names and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            auto t0 = std::chrono::steady_clock::now();
            auto rep = wsc::classify(g);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            emit(wsc::classification_report(g, rep, ms), out_path);
            if (!dot_path.empty()) {
                std::vector<int> witness;
                for (const auto& [cond, res] : rep.verdicts)
                    if (!res.holds && witness.empty()) witness = res.witness;
                std::ofstream dot(dot_path);
                dot << wsc::witness_dot(g, witness);
            }
            return 0;
        }

        if (lexbfs_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            auto rec = wsc::lexbfs(g, root, tie_break == "random" ? wsc::TieBreak::seeded_random : wsc::TieBreak::lowest_id, seed);
            json doc;
            doc["root"] = rec.root;
            doc["order"] = rec.order;
            doc["father"] = rec.father;
            doc["labels"] = rec.label_history;
            doc["dismantling_order"] = rec.elimination_order();
            doc["father_dominates"] = wsc::verify_father_domination(g, rec).ok;
            doc["fellow_traveler"] = wsc::verify_fellow_traveler(g, rec).ok;
            doc["combing_ok"] = wsc::verify_combing(g, wsc::build_combing(g, rec)).ok;
            emit(doc.dump(2), out_path);
            return 0;
        }

        if (dismantle_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            json doc;
            if (!order_csv.empty()) {
                auto order = parse_id_list(order_csv);
                auto check = wsc::verify_dismantling(g, order);
                doc["order"] = order;
                doc["valid"] = check.ok;
                if (!check.ok) doc["failing_index"] = check.failing_index;
            } else {
                auto order = wsc::greedy_dismantling(g);
                doc["dismantlable"] = order.has_value();
                if (order) doc["order"] = *order;
            }
            emit(doc.dump(2), out_path);
            return doc.contains("valid") && !doc["valid"].get<bool>() ? 1 : 0;
        }

        if (copwin_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            auto res = wsc::solve_copwin(g);
            json doc;
            doc["copwin"] = res.copwin;
            if (res.copwin) {
                doc["best_start"] = res.best_start;
                doc["capture_bound"] = res.strategy.capture_bound;
            } else {
                doc["safe_states"] = res.safe_states.size();
            }
            doc["matches_dismantlable"] = wsc::crosscheck_dismantlable_copwin(g);
            emit(doc.dump(2), out_path);
            return 0;
        }

        if (sdn_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            wsc::FlagComplex x(g, dim_cap);
            wsc::SdnMode m = mode == "vertex" ? wsc::SdnMode::vertex_condition
                           : mode == "edge"   ? wsc::SdnMode::edge_condition
                                              : wsc::SdnMode::all_simplices;
            json doc;
            if (!base_csv.empty()) {
                auto check = wsc::check_sdn(x, wsc::Simplex(parse_id_list(base_csv)), m);
                doc["base"] = parse_id_list(base_csv);
                doc["ok"] = check.ok;
                if (!check.ok) {
                    doc["witness"]["radius"] = check.witness.radius;
                    doc["witness"]["sigma"] = check.witness.sigma.verts;
                    doc["witness"]["descent"] = check.witness.descent;
                }
            } else {
                doc["ok"] = true;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    auto check = wsc::check_sdn(x, wsc::Simplex::single(v), m);
                    if (!check.ok) {
                        doc["ok"] = false;
                        doc["base"] = std::vector<int>{v};
                        doc["witness"]["radius"] = check.witness.radius;
                        doc["witness"]["sigma"] = check.witness.sigma.verts;
                        doc["witness"]["descent"] = check.witness.descent;
                        break;
                    }
                }
            }
            emit(doc.dump(2), out_path);
            return doc["ok"].get<bool>() ? 0 : 1;
        }

        if (fixpoint_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            wsc::PermGroup grp = perm_csv.empty()
                                     ? wsc::automorphisms(g)
                                     : [&] {
                                           std::vector<wsc::Permutation> gens;
                                           for (const auto& csv : perm_csv) gens.push_back(parse_id_list(csv));
                                           return wsc::PermGroup::from_generators(g, gens);
                                       }();
            wsc::FlagComplex x(g, dim_cap);
            auto cert = wsc::invariant_simplex(x, grp, seed_vertex);
            json doc;
            doc["group_order"] = grp.order();
            doc["seed_vertex"] = cert.seed;
            doc["hull"] = cert.hull;
            doc["rounds"] = cert.rounds;
            doc["simplex"] = cert.simplex.verts;
            doc["verified"] = wsc::verify_invariant_certificate(x, grp, cert);
            emit(doc.dump(2), out_path);
            return doc["verified"].get<bool>() ? 0 : 1;
        }

        if (round_cmd->parsed()) {
            wsc::Graph g = read_input(input, format);
            auto rep = wsc::roundness_audit(wsc::FlagComplex(g, dim_cap));
            json doc;
            doc["diameter"] = rep.diameter;
            doc["radius"] = rep.radius;
            doc["round"] = rep.round;
            doc["core"] = rep.core;
            doc["farber_holds"] = rep.farber_holds;
            emit(doc.dump(2), out_path);
            return 0;
        }

        if (gen_cmd->parsed()) {
            wsc::Graph g = [&] {
                if (family == "wheel") return wsc::wheel_graph(gen_k);
                if (family == "path") return wsc::path_graph(gen_n);
                if (family == "cycle") return wsc::cycle_graph(gen_n);
                if (family == "complete") return wsc::complete_graph(gen_n);
                if (family == "systolic_disk") return wsc::systolic_disk(gen_layers);
                if (family == "power") {
                    if (power_input.empty()) throw std::runtime_error("--family power needs --input");
                    return wsc::graph_power(read_input(power_input, format), gen_k);
                }
                if (family == "random_filtered") {
                    if (cls == "weakly_bridged") return wsc::random_weakly_bridged(gen_n, gen_p, seed);
                    if (cls == "bridged") return wsc::random_filtered(gen_n, gen_p, wsc::GraphClass::bridged, seed);
                    if (cls == "weakly_bridged_not_bridged")
                        return wsc::random_filtered(gen_n, gen_p, wsc::GraphClass::weakly_bridged_not_bridged, seed);
                    if (cls == "not_weakly_bridged")
                        return wsc::random_filtered(gen_n, gen_p, wsc::GraphClass::not_weakly_bridged, seed);
                    throw std::runtime_error("unknown --class " + cls);
                }
                throw std::runtime_error("unknown --family " + family);
            }();
            emit(wsc::serialize_graph(g, parse_format(format)), out_path);
            return 0;
        }

        if (suite_cmd->parsed()) {
            if (list_suites) {
                for (const auto& name : wsc::suite_names()) std::cout << name << "\n";
                return 0;
            }
            wsc::SuiteOptions opts{seed, jobs};
            std::vector<wsc::SuiteResult> results;
            if (suite_name == "all") {
                results = wsc::run_all_suites(opts);
            } else {
                results.push_back(wsc::run_suite(suite_name, opts));
            }
            bool all_passed = true;
            for (const auto& r : results) {
                std::cerr << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.seconds << "s): " << r.detail
                          << "\n";
                all_passed = all_passed && r.passed;
            }
            emit(wsc::suites_report_json(results, opts), out_path);
            return all_passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
