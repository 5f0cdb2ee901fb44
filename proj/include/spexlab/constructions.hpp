#pragma once

#include "spexlab/graph.hpp"

#include <vector>

namespace spexlab {

// Graph together with a named vertex partition (masks). Constructions that
// later feed equitable quotients expose their natural parts here.
struct PartitionedGraph {
    Graph graph;
    std::vector<uint64_t> parts;
};

// Parameters naming a nearly-k-regular P_{2k+3}-free family member.
struct FamilySpec {
    enum class Variant { g_family, v_family };
    int n = 0;
    int k = 0;
    int ell = 0;        // forbidden path order, 2k+3 by default
    Variant variant = Variant::g_family;

    // nearly k-regular graphs need k*n odd
    void validate() const;
};

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph star(int n);       // K_{1,n-1}
Graph cycle(int n);
Graph matching(int m);   // floor(m/2) disjoint edges on m vertices

Graph turan(int n, int r);
Graph fan(int ell);      // K_1 v P_ell, ell >= 4

// Nearly k-regular graph of order 2k+1 whose walk counts dominate its family
// for k != 7 (k odd, >= 3). Parts: {u}, clique half attached to w, clique
// half matched down, {w}, small clique side, large clique side.
PartitionedGraph q_star_parts(int k);
Graph q_star(int k);

// The order-15 nearly 7-regular competitor that wins for k = 7.
// Parts: {u}, K_6, independent triple, K_5.
PartitionedGraph q_double_star_parts();
Graph q_double_star();

// k-regular graph on m vertices (circulant; antipodal chords for odd k).
Graph regular_graph(int m, int k);

// Disjoint union of k-regular components, each of order in [k+1, 2k]
// (so every component is trivially P_{2k+3}-free). Greedy largest feasible
// component size with backtracking. m == 0 yields the empty graph.
Graph regular_spread(int m, int k);

// Member of the extremal family: special component (q_star / q_double_star)
// plus a k-regular spread on the remaining n-(2k+1) vertices. Parts are the
// special component's parts followed by the spread (when nonempty).
PartitionedGraph nearly_regular_v_family_parts(int n, int k);
Graph nearly_regular_v_family(int n, int k);

// The conjectured/characterized extremal graphs for H_ell-free graphs of
// order n: complete bipartite plus a (nearly) k-regular P-free graph in one
// side, one graph per admissible |L|.
std::vector<Graph> spex_candidate(int n, int ell);

// |L| values admissible for (n, ell) per the characterization tables.
std::vector<int> spex_candidate_left_sizes(int n, int ell);

// Fan parameter: ell = 2k+3 (odd) or 2k+2 (even) => k.
int fan_regularity_parameter(int ell);

} // namespace spexlab
