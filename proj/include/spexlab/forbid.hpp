#pragma once

#include "spexlab/graph.hpp"

namespace spexlab {

// True iff G contains a path on ell vertices as a (not necessarily induced)
// subgraph. Bitmask DP per component up to order 24, pruned DFS beyond.
bool has_path(const Graph& g, int ell);

// Maximum number of vertices on any path of G.
int longest_path_order(const Graph& g);

// True iff G contains the fan K_1 v P_ell: some vertex whose neighborhood
// contains a P_ell.
bool has_fan(const Graph& g, int ell);

// Exhaustive injective-embedding test (test oracle, |H| <= |G| <= 10).
bool naive_subgraph_oracle(const Graph& h, const Graph& g);

// Checks the join biconditional on an instance: H v empty(2k+3) contains the
// fan K_1 v P_ell exactly when H has a vertex of degree > k or contains
// P_ell. Returns whether the biconditional held.
bool check_observation1(const Graph& h, int k, int ell);

} // namespace spexlab
