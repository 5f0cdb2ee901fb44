#pragma once

#include "spexlab/bigint.hpp"
#include "spexlab/graph.hpp"

#include <vector>

namespace spexlab {

// Exact walk counts: per_vertex[l-1][u] is the number of walks of length l
// starting at u; totals[l-1] sums over the starting vertex.
struct WalkProfile {
    int order = 0;
    std::vector<std::vector<BigInt>> per_vertex;
    std::vector<BigInt> totals;

    int levels() const { return static_cast<int>(totals.size()); }
    const BigInt& total(int l) const { return totals.at(static_cast<size_t>(l - 1)); }
    const BigInt& at(int l, int u) const {
        return per_vertex.at(static_cast<size_t>(l - 1)).at(static_cast<size_t>(u));
    }
};

WalkProfile walk_profile(const Graph& g, int levels);

// Predicted totals W^1..W^4 for any nearly k-regular graph of order n
// (k odd >= 3, k*n odd).
std::vector<BigInt> walk_closed_forms(int n, int k);

enum class WalkOrdering { less, equal, greater };

struct WalkComparison {
    WalkOrdering ordering = WalkOrdering::equal;
    int first_diff_level = 0;   // 0 when equal
    BigInt gap;                 // positive difference at that level
};

// Lexicographic comparison of the total-walk sequences. Sequences agreeing
// through |G1|+|G2| terms satisfy the same <= (|G1|+|G2|)-term linear
// recurrences and therefore agree forever, so that cutoff decides equality.
WalkComparison walk_compare(const Graph& g1, const Graph& g2);

// Iterated argmax filtration of a family through walk level `ell`.
std::vector<Graph> ex_filter(const std::vector<Graph>& family, int ell);

struct ExInfinityResult {
    std::vector<size_t> survivors;   // indices into the input family
    int stable_after_level = 0;      // last level at which the set shrank
};

// Fixed point of the filtration: run until survivors are pairwise
// walk-equivalent (cutoff as in walk_compare).
ExInfinityResult ex_infinity_indices(const std::vector<Graph>& family);
std::vector<Graph> ex_infinity(const std::vector<Graph>& family);

} // namespace spexlab
