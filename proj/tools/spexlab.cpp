#include "spexlab/constructions.hpp"
#include "spexlab/forbid.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/verify.hpp"
#include "spexlab/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace spexlab;

namespace {

constexpr const char* kSchema = "spexlab/1";
constexpr const char* kVersion = "1.0.0";

json report_base(const std::string& command, json params) {
    json j;
    j["schema"] = kSchema;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::vector<Graph> read_graphs(const std::string& file) {
    std::vector<Graph> out;
    auto consume = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out.push_back(graph6_decode(line));
        }
    };
    if (file.empty()) {
        consume(std::cin);
    } else {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open input file: " + file);
        consume(in);
    }
    return out;
}

std::vector<uint64_t> parse_parts(const std::string& spec, int n) {
    std::vector<uint64_t> parts;
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        uint64_t mask = 0;
        std::stringstream verts(group);
        std::string v;
        while (std::getline(verts, v, ',')) {
            if (v.empty()) continue;
            int idx = std::stoi(v);
            if (idx < 0 || idx >= n) throw std::runtime_error("partition vertex out of range");
            mask |= 1ull << idx;
        }
        if (mask) parts.push_back(mask);
    }
    return parts;
}

json poly_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).to_string());
    json j;
    j["coefficients_ascending"] = coeffs;
    j["pretty"] = p.to_string();
    return j;
}

const char* ordering_symbol(WalkOrdering o) {
    switch (o) {
        case WalkOrdering::greater: return "≻";
        case WalkOrdering::less: return "≺";
        default: return "≡";
    }
}

int run_construct(const std::string& name, const std::vector<int>& args) {
    auto need = [&](size_t c) {
        if (args.size() != c)
            throw std::runtime_error("construct " + name + ": expected " +
                                     std::to_string(c) + " parameter(s)");
    };
    std::vector<Graph> graphs;
    if (name == "complete") { need(1); graphs.push_back(complete(args[0])); }
    else if (name == "empty") { need(1); graphs.push_back(empty_graph(args[0])); }
    else if (name == "path") { need(1); graphs.push_back(path(args[0])); }
    else if (name == "star") { need(1); graphs.push_back(star(args[0])); }
    else if (name == "cycle") { need(1); graphs.push_back(cycle(args[0])); }
    else if (name == "matching") { need(1); graphs.push_back(matching(args[0])); }
    else if (name == "turan") { need(2); graphs.push_back(turan(args[0], args[1])); }
    else if (name == "fan") { need(1); graphs.push_back(fan(args[0])); }
    else if (name == "qstar") { need(1); graphs.push_back(q_star(args[0])); }
    else if (name == "qdoublestar") { need(0); graphs.push_back(q_double_star()); }
    else if (name == "regular") { need(2); graphs.push_back(regular_graph(args[0], args[1])); }
    else if (name == "spread") { need(2); graphs.push_back(regular_spread(args[0], args[1])); }
    else if (name == "vfamily") { need(2); graphs.push_back(nearly_regular_v_family(args[0], args[1])); }
    else if (name == "spex-candidate") { need(2); graphs = spex_candidate(args[0], args[1]); }
    else throw std::runtime_error("construct: unknown construction '" + name + "'");
    for (const Graph& g : graphs) std::cout << graph6_encode(g) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spexlab: spectral extremal graphs of fan-free families"};
    app.require_subcommand(1);
    app.fallthrough();   // global flags are accepted after the subcommand too

    int jobs = 1;
    if (const char* env = std::getenv("SPEXLAB_JOBS")) jobs = std::max(1, std::atoi(env));
    std::string file;
    bool csv = false, timing = false, seedless = true;
    app.add_option("--jobs", jobs, "worker threads (default SPEXLAB_JOBS or 1)");
    app.add_option("--file", file, "read graph6 lines from a file instead of stdin");
    app.add_flag("--csv", csv, "tabular output where applicable");
    app.add_flag("--timing", timing, "include wall-clock timings in reports");
    app.add_flag("--seedless", seedless,
                 "deterministic mode (always on; there is no randomness to seed)");

    auto* c_construct = app.add_subcommand("construct", "emit a named construction as graph6");
    std::string cname;
    std::vector<int> cargs;
    c_construct->add_option("name", cname)->required();
    c_construct->add_option("params", cargs);

    auto* c_forbid = app.add_subcommand("forbid", "fan/path containment verdicts per input graph");
    int fan_ell = 0, path_ell = 0;
    c_forbid->add_option("--fan", fan_ell, "fan order (K_1 v P_ell)");
    c_forbid->add_option("--path", path_ell, "path order");

    auto* c_rho = app.add_subcommand("rho", "spectral radius per input graph");
    double tol = 1e-12;
    c_rho->add_option("--tol", tol, "power iteration residual tolerance");

    auto* c_quotient = app.add_subcommand("quotient", "equitable quotient matrix of a partition");
    std::string parts_spec;
    c_quotient->add_option("--parts", parts_spec, "semicolon-separated comma lists, e.g. 0,1;2,3")
        ->required();

    auto* c_walks = app.add_subcommand("walks", "exact walk totals per input graph");
    int upto = 4;
    c_walks->add_option("--upto", upto, "highest walk length");

    auto* c_walkcmp = app.add_subcommand("walkcmp", "lexicographic walk-sequence comparison");
    std::string g6a, g6b;
    c_walkcmp->add_option("a", g6a)->required();
    c_walkcmp->add_option("b", g6b)->required();

    auto* c_spex = app.add_subcommand("spex", "brute-force spectral extremal certificate");
    int sn = 0, sell = 0;
    bool long_run = false;
    c_spex->add_option("--n", sn)->required();
    c_spex->add_option("--ell", sell)->required();
    c_spex->add_flag("--long-run", long_run, "allow n in {9, 10}");

    auto* c_verify = app.add_subcommand("verify", "compare brute-force winners to the table");
    int vn = 0, vell = 0;
    bool vlong = false;
    c_verify->add_option("--n", vn)->required();
    c_verify->add_option("--ell", vell)->required();
    c_verify->add_flag("--long-run", vlong);

    auto* c_lemma = app.add_subcommand("verify-lemma", "desk-scale lemma verification harnesses");
    std::string which;
    int lk = 3, ln = 0;
    c_lemma->add_option("which", which, "bounded-order | walk-lemma | spec-compare | lower-bounds")
        ->required();
    c_lemma->add_option("--k", lk)->required();
    c_lemma->add_option("--n", ln)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*c_construct) return run_construct(cname, cargs);

        if (*c_forbid) {
            if ((fan_ell > 0) == (path_ell > 0))
                throw std::runtime_error("forbid: pass exactly one of --fan or --path");
            for (const Graph& g : read_graphs(file))
                std::cout << ((fan_ell > 0 ? has_fan(g, fan_ell) : has_path(g, path_ell))
                                  ? "true" : "false")
                          << "\n";
            return 0;
        }

        if (*c_rho) {
            json out = report_base("rho", {{"tol", tol}});
            json rows = json::array();
            if (csv) std::cout << "graph6,rho,residual,iterations\n";
            for (const Graph& g : read_graphs(file)) {
                SpectralResult r = spectral_radius(g, tol);
                if (csv) {
                    std::cout << graph6_encode(g) << "," << format_double(r.rho) << ","
                              << format_double(r.residual) << "," << r.iterations << "\n";
                    continue;
                }
                json row;
                row["graph6"] = graph6_encode(g);
                row["rho"] = format_double(r.rho);
                row["residual"] = format_double(r.residual);
                row["method"] = "power-iteration";
                if (timing) row["iterations"] = r.iterations;
                rows.push_back(row);
            }
            if (!csv) {
                out["results"] = rows;
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (*c_quotient) {
            json out = report_base("quotient", {{"parts", parts_spec}});
            json rows = json::array();
            for (const Graph& g : read_graphs(file)) {
                QuotientMatrix q = equitable_quotient(g, parse_parts(parts_spec, g.order()));
                IntPolynomial cp = char_poly_exact_ll(q.entries);
                json row;
                row["graph6"] = graph6_encode(g);
                row["matrix"] = q.entries;
                row["part_sizes"] = q.part_sizes;
                row["charpoly"] = poly_json(cp);
                row["largest_root"] = largest_real_root(cp, 80).decimal(15);
                rows.push_back(row);
            }
            out["results"] = rows;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*c_walks) {
            json out = report_base("walks", {{"upto", upto}});
            json rows = json::array();
            if (csv) std::cout << "graph6,level,total\n";
            for (const Graph& g : read_graphs(file)) {
                WalkProfile p = walk_profile(g, upto);
                if (csv) {
                    for (int l = 1; l <= upto; ++l)
                        std::cout << graph6_encode(g) << "," << l << ","
                                  << p.total(l).to_string() << "\n";
                    continue;
                }
                json row;
                row["graph6"] = graph6_encode(g);
                json totals = json::array();
                for (int l = 1; l <= upto; ++l) totals.push_back(p.total(l).to_string());
                row["totals"] = totals;
                rows.push_back(row);
            }
            if (!csv) {
                out["results"] = rows;
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (*c_walkcmp) {
            WalkComparison c = walk_compare(graph6_decode(g6a), graph6_decode(g6b));
            json out = report_base("walkcmp", {{"a", g6a}, {"b", g6b}});
            out["ordering"] = ordering_symbol(c.ordering);
            out["first_diff_level"] = c.first_diff_level;
            out["gap"] = c.gap.to_string();
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*c_spex) {
            SpexCertificate cert = spex_bruteforce(sn, sell, long_run, jobs);
            json out = report_base("spex", {{"n", sn}, {"ell", sell}, {"long_run", long_run}});
            out["winners"] = cert.winners;
            out["rho"] = cert.rho.decimal(20);
            out["rho_float"] = format_double(cert.rho_float);
            out["charpoly"] = poly_json(cert.charpoly);
            out["shortlist_size"] = cert.shortlist_size;
            json stats;
            stats["graphs_enumerated"] = cert.stats.graphs_enumerated;
            stats["graphs_pruned"] = cert.stats.graphs_pruned;
            if (timing) stats["wall_seconds"] = cert.stats.wall_seconds;
            out["stats"] = stats;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*c_verify) {
            TheoremReport rep = verify_theorem(vn, vell, vlong, jobs);
            json out = report_base("verify", {{"n", vn}, {"ell", vell}});
            out["k"] = rep.k;
            out["winners"] = rep.winners;
            out["expected"] = rep.expected;
            out["admissible_left_sizes"] = rep.admissible_left_sizes;
            json structures = json::array();
            for (const auto& s : rep.structures) {
                json row;
                row["canonical"] = s.canonical;
                row["decomposed"] = s.decomposed;
                row["left_size"] = s.left_size;
                row["left_degrees"] = {s.left_min_degree, s.left_max_degree};
                row["left_path_free"] = s.left_path_free;
                row["left_regular_profile"] = s.left_regular_profile;
                row["matches_table"] = s.matches_table;
                structures.push_back(row);
            }
            out["structures"] = structures;
            out["winners_match_expected"] = rep.winners_match_expected;
            out["result"] = rep.pass ? "PASS" : "FAIL";
            std::cout << out.dump(2) << "\n";
            return rep.pass ? 0 : 1;
        }

        if (*c_lemma) {
            json out = report_base("verify-lemma", {{"which", which}, {"k", lk}, {"n", ln}});
            bool pass = false;
            if (which == "bounded-order") {
                BoundedOrderReport r = verify_bounded_order(lk, ln);
                out["nearly_regular_connected"] = r.nearly_regular_connected;
                out["clique_neighborhood"] = r.clique_neighborhood;
                out["containing_path"] = r.containing_path;
                out["counterexamples"] = r.counterexamples;
                pass = r.all_contain_path;
            } else if (which == "walk-lemma") {
                WalkLemmaReport r = verify_walk_lemma(lk, ln);
                out["family_size"] = r.family_size;
                out["survivors"] = r.survivor_count;
                out["expected"] = r.expected_count;
                out["stable_after_level"] = r.stable_after_level;
                pass = r.survivors_equal_v_family;
            } else if (which == "spec-compare") {
                SpecCompareReport r = verify_spec_compare(lk, ln);
                out["feasible"] = r.feasible;
                if (!r.feasible) out["reason"] = r.reason;
                out["rho_float"] = format_double(r.rho_float);
                out["rho_exact"] = r.rho_exact;
                out["bound"] = format_double(r.bound);
                out["margin"] = format_double(r.margin);
                out["below_bound_exact"] = r.below_bound_exact;
                out["quotient_float_gap"] = format_double(r.quotient_float_gap);
                pass = r.pass;
            } else if (which == "lower-bounds") {
                LowerBoundReport r = verify_lower_bounds(lk, ln);
                out["left_size"] = r.left_size;
                out["four_lr"] = r.four_lr;
                out["shift"] = r.shift;
                out["fan_free"] = r.fan_free;
                out["observation_holds"] = r.observation_holds;
                out["quotient_poly_matches"] = r.quotient_poly_matches;
                out["rho_float"] = format_double(r.rho_float);
                out["closed_form"] = format_double(r.closed_form);
                out["diff"] = format_double(r.diff);
                pass = r.pass;
            } else {
                throw std::runtime_error("verify-lemma: unknown harness '" + which + "'");
            }
            out["result"] = pass ? "PASS" : "FAIL";
            std::cout << out.dump(2) << "\n";
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        json err;
        err["schema"] = kSchema;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 2;
}
