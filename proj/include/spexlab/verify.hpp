#pragma once

#include "spexlab/graph.hpp"
#include "spexlab/intpoly.hpp"

#include <string>
#include <vector>

namespace spexlab {

struct BoundedOrderReport {
    int k = 0, n = 0;
    long long nearly_regular_connected = 0;  // connected, degrees (k^..., k-1)
    long long clique_neighborhood = 0;       // ... whose low-degree vertex sees a clique
    long long containing_path = 0;           // of those, containing P_{2k+3}
    bool all_contain_path = false;
    std::vector<std::string> counterexamples;  // canonical graph6
};

// Exhaustively checks that every connected nearly-k-regular graph of order n
// whose degree-(k-1) vertex has a clique neighborhood contains P_{2k+3}.
BoundedOrderReport verify_bounded_order(int k, int n);

struct WalkLemmaReport {
    int k = 0, n = 0;
    size_t family_size = 0;       // all nearly-k-regular P_{2k+3}-free classes of order n
    size_t survivor_count = 0;
    size_t expected_count = 0;    // members whose special component is the q_star
    int stable_after_level = 0;
    bool survivors_equal_v_family = false;
};

// Builds the full family from enumerated connected components and runs the
// walk filtration to its fixed point; k = 3 only (cost ceiling).
WalkLemmaReport verify_walk_lemma(int k, int n);

// Every nearly-k-regular P_{2k+3}-free graph of order n up to isomorphism,
// assembled from enumerated connected components (k = 3 only).
std::vector<Graph> nearly_regular_family_members(int k, int n);

struct SpecCompareReport {
    int k = 0, n = 0;
    bool feasible = false;
    std::string reason;
    double rho_float = 0.0;
    std::string rho_exact;          // decimal string of the quotient root
    double bound = 0.0;             // (k + sqrt(k^2 + n^2 - 4)) / 2
    double margin = 0.0;            // bound - rho
    double quotient_float_gap = 0.0;
    bool below_bound_exact = false;     // exact root comparison against g(x)
    bool quotient_matches_reference = false;  // entries equal the closed-form matrix
    bool pass = false;
};

// T(n,2) with an extremal family member embedded in one side: checks
// rho(G) < (k + sqrt(k^2 + n^2 - 4)) / 2 exactly and numerically.
SpecCompareReport verify_spec_compare(int k, int n);

struct LowerBoundReport {
    int k = 0, n = 0;
    int left_size = 0;
    long long four_lr = 0;          // 4 |L| |R|
    long long shift = 0;            // n^2 - 4|L||R|, expected {0, 1, 4}
    bool fan_free = false;
    bool observation_holds = false;
    bool quotient_poly_matches = false;   // char poly == x^2 - k x - |L||R|
    double rho_float = 0.0;
    double closed_form = 0.0;
    double diff = 0.0;
    bool pass = false;
};

// Builds the H v empty construction for the (k, n mod 4) row and confirms the
// closed-form spectral radius and fan-freeness.
LowerBoundReport verify_lower_bounds(int k, int n);

// |L| for the lower-bound construction at (k, n).
int lower_bound_left_size(int k, int n);

} // namespace spexlab
