#pragma once

#include "spexlab/graph.hpp"
#include "spexlab/intpoly.hpp"
#include "spexlab/roots.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spexlab {

// Predicate over graphs; must be hereditary under vertex deletion when used
// to prune enumeration.
using GraphPredicate = std::function<bool(const Graph&)>;

struct EnumerateOptions {
    int order = 0;                  // target order
    GraphPredicate predicate;       // hereditary filter, may be empty
    bool connected_only = false;    // generate connected graphs directly
    // called while descending; children of rejected graphs are never built
    // (used for admissible-bound pruning). Return false to cut the subtree.
    GraphPredicate descend;
    // receives every intermediate level as well when set
    std::function<void(const Graph&)> on_intermediate;
};

// Isomorph-free exhaustive generation by canonical augmentation: a child is
// kept only when its new vertex attains the minimal marked canonical form
// among deletable vertices. Exactly one representative per isomorphism class.
std::vector<Graph> enumerate_graphs_ex(const EnumerateOptions& opts);

// one representative per isomorphism class on n vertices, n <= 10
std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& pred = nullptr);

// classes with max degree <= max_deg, n <= 14, max_deg <= 7
std::vector<Graph> enumerate_degree_constrained(int n, int max_deg, bool connected_only);

struct SpexStats {
    long long graphs_enumerated = 0;   // order-n classes examined
    long long graphs_pruned = 0;       // subtrees cut by the edge-count bound
    double wall_seconds = 0.0;         // not part of deterministic output
};

struct SpexCertificate {
    int n = 0;
    int ell = 0;
    std::vector<std::string> winners;  // canonical graph6, sorted
    RootInterval rho;                  // isolated largest root of a winner
    double rho_float = 0.0;
    IntPolynomial charpoly;            // characteristic polynomial of a winner
    size_t shortlist_size = 0;
    SpexStats stats;
};

// Brute-force SPEX(n, H_ell): enumerate fan-free classes, track floating
// spectral radii, settle the winner set exactly within a 1e-6 shortlist band.
// n <= 8 by default, 9-10 behind long_run.
SpexCertificate spex_bruteforce(int n, int ell, bool long_run = false, int jobs = 1);

struct WinnerStructure {
    std::string canonical;
    bool decomposed = false;    // some complete-join split (L, independent R) exists
    int left_size = -1;
    int left_min_degree = -1;
    int left_max_degree = -1;
    bool left_path_free = false;     // G[L] is P_ell-free
    bool left_regular_profile = false;  // k-regular or nearly k-regular
    bool matches_table = false;
};

struct TheoremReport {
    int n = 0, ell = 0, k = 0;
    bool candidates_feasible = false;
    std::vector<std::string> winners;
    std::vector<std::string> expected;          // candidate canonical forms
    std::vector<int> admissible_left_sizes;
    std::vector<WinnerStructure> structures;
    bool winners_match_expected = false;
    bool pass = false;
};

// Structural decomposition of brute-force winners against the
// characterization table.
TheoremReport verify_theorem(int n, int ell, bool long_run = false, int jobs = 1);

struct PartitionDiagnosticsReport {
    int n = 0;
    uint64_t side_mask = 0;        // V_1 of the internal-edge-minimal bipartition
    int internal_edges = 0;
    int max_internal_degree = 0;
    bool degree_condition = false; // d_G(v) >= n - |V_i| for every vertex
};

// Desk-scale check of the skeleton conclusions (r = 2) on a given graph.
PartitionDiagnosticsReport partition_diagnostics(const Graph& g);

} // namespace spexlab
