#pragma once

#include "spexlab/graph.hpp"
#include "spexlab/intpoly.hpp"
#include "spexlab/roots.hpp"

#include <vector>

namespace spexlab {

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;   // nonnegative, max entry 1
    double residual = 0.0;        // max-norm of A x - rho x
    long iterations = 0;
};

// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
// vector with Rayleigh-quotient estimates; disconnected graphs are handled
// per component and the best component's Perron vector is returned (zeros
// elsewhere). Throws std::runtime_error on non-convergence.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);

struct QuotientMatrix {
    std::vector<std::vector<long long>> entries;
    std::vector<int> part_sizes;
};

// Verifies that `parts` is an equitable partition of g and returns its
// quotient matrix; throws std::invalid_argument naming a violating
// (vertex, part) otherwise.
QuotientMatrix equitable_quotient(const Graph& g, const std::vector<uint64_t>& parts);

// Characteristic polynomial of the adjacency matrix (order <= 16).
IntPolynomial adjacency_char_poly(const Graph& g);

enum class Ordering { less, equal, greater };

// Exact comparison of spectral radii via characteristic polynomials
// (both orders <= 16).
Ordering rho_compare_exact(const Graph& g1, const Graph& g2);

// Closed-form join bound (d + d' + sqrt((d-d')^2 + 4 n0 (n-n0))) / 2.
double join_bound(double d1, double d2, int n0, int n);

// Edge rewiring at a vertex: deletes edges u-v for v in `deleted`, adds u-w
// for w in `added`. Requires the Perron-weight hypothesis
// sum x_w >= sum x_v and distinct endpoint sets; returns whether the strict
// spectral increase was observed with margin > 10*tol.
bool rewiring_check(const Graph& g, int u, const std::vector<int>& deleted,
                    const std::vector<int>& added, double tol = 1e-12);

// Reference quotient matrices of the named partitions as standalone integer
// matrices (n even): the 3-part matching form, the q_double_star embedding
// and the q_star embedding.
std::vector<std::vector<long long>> b1_matrix(int n);        // 3x3
std::vector<std::vector<long long>> b7_matrix(int n);        // 6x6
std::vector<std::vector<long long>> bk_matrix(int k, int n); // 8x8

} // namespace spexlab
