#include "spexlab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spexlab {

namespace {

struct ComponentSpectrum {
    double rho;
    std::vector<double> vec;   // indexed by component-local vertex
    double residual;
    long iterations;
};

ComponentSpectrum power_iterate(const Graph& comp, double tol) {
    int m = comp.order();
    if (m == 1) return {0.0, {1.0}, 0.0, 0};
    std::vector<double> x(static_cast<size_t>(m), 1.0), ax(static_cast<size_t>(m));
    constexpr long kMaxIters = 4000000;
    for (long it = 1; it <= kMaxIters; ++it) {
        double xx = 0.0, xax = 0.0;
        for (int v = 0; v < m; ++v) {
            double s = 0.0;
            for (uint64_t nb = comp.neighbors(v); nb;) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                s += x[static_cast<size_t>(u)];
            }
            ax[static_cast<size_t>(v)] = s;
            xx += x[static_cast<size_t>(v)] * x[static_cast<size_t>(v)];
            xax += x[static_cast<size_t>(v)] * s;
        }
        double rayleigh = xax / xx;
        double resid = 0.0;
        for (int v = 0; v < m; ++v)
            resid = std::max(resid, std::abs(ax[static_cast<size_t>(v)] - rayleigh * x[static_cast<size_t>(v)]));
        if (resid <= tol) {
            double top = *std::max_element(x.begin(), x.end());
            for (auto& e : x) e /= top;
            return {rayleigh, x, resid, it};
        }
        // next iterate of A + I, normalized in the max norm
        double norm = 0.0;
        for (int v = 0; v < m; ++v) {
            ax[static_cast<size_t>(v)] += x[static_cast<size_t>(v)];
            norm = std::max(norm, std::abs(ax[static_cast<size_t>(v)]));
        }
        for (int v = 0; v < m; ++v) x[static_cast<size_t>(v)] = ax[static_cast<size_t>(v)] / norm;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

} // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (g.order() < 1) throw std::invalid_argument("spectral_radius: empty graph");
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    tol = std::min(tol, 1e-9);

    SpectralResult out;
    out.perron.assign(static_cast<size_t>(g.order()), 0.0);
    bool first = true;
    for (uint64_t mask : g.components()) {
        Graph comp = g.induced(mask);
        ComponentSpectrum cs = power_iterate(comp, tol);
        if (first || cs.rho > out.rho) {
            first = false;
            out.rho = cs.rho;
            out.residual = cs.residual;
            out.iterations = cs.iterations;
            std::fill(out.perron.begin(), out.perron.end(), 0.0);
            int local = 0;
            for (uint64_t s = mask; s;) {
                int v = std::countr_zero(s);
                s &= s - 1;
                out.perron[static_cast<size_t>(v)] = cs.vec[static_cast<size_t>(local++)];
            }
        }
    }
    return out;
}

QuotientMatrix equitable_quotient(const Graph& g, const std::vector<uint64_t>& parts) {
    uint64_t seen = 0;
    for (uint64_t p : parts) {
        if (p == 0) throw std::invalid_argument("equitable_quotient: empty part");
        if (p & seen) throw std::invalid_argument("equitable_quotient: parts overlap");
        seen |= p;
    }
    if (seen != g.vertex_mask())
        throw std::invalid_argument("equitable_quotient: parts must cover the vertex set");

    size_t r = parts.size();
    QuotientMatrix out;
    out.entries.assign(r, std::vector<long long>(r, 0));
    out.part_sizes.reserve(r);
    for (uint64_t p : parts) out.part_sizes.push_back(std::popcount(p));

    for (size_t i = 0; i < r; ++i) {
        bool first_vertex = true;
        for (uint64_t s = parts[i]; s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            for (size_t j = 0; j < r; ++j) {
                long long d = std::popcount(g.neighbors(v) & parts[j]);
                if (first_vertex) {
                    out.entries[i][j] = d;
                } else if (out.entries[i][j] != d) {
                    throw std::invalid_argument(
                        "equitable_quotient: partition not equitable at vertex " +
                        std::to_string(v) + " toward part " + std::to_string(j));
                }
            }
            first_vertex = false;
        }
    }
    return out;
}

IntPolynomial adjacency_char_poly(const Graph& g) {
    int n = g.order();
    if (n > 16) throw std::invalid_argument("adjacency_char_poly: order exceeds 16");
    std::vector<std::vector<long long>> m(static_cast<size_t>(n),
                                          std::vector<long long>(static_cast<size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) m[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    return char_poly_exact_ll(m);
}

Ordering rho_compare_exact(const Graph& g1, const Graph& g2) {
    if (g1.order() < 1 || g2.order() < 1)
        throw std::invalid_argument("rho_compare_exact: graphs must be nonempty");
    int c = compare_largest_roots(adjacency_char_poly(g1), adjacency_char_poly(g2));
    return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
}

double join_bound(double d1, double d2, int n0, int n) {
    if (n0 < 0 || n0 > n) throw std::invalid_argument("join_bound: need 0 <= n0 <= n");
    double disc = (d1 - d2) * (d1 - d2) + 4.0 * n0 * (n - n0);
    return 0.5 * (d1 + d2 + std::sqrt(disc));
}

bool rewiring_check(const Graph& g, int u, const std::vector<int>& deleted,
                    const std::vector<int>& added, double tol) {
    if (!g.is_connected()) throw std::invalid_argument("rewiring_check: graph must be connected");
    if (u < 0 || u >= g.order()) throw std::out_of_range("rewiring_check: bad vertex");
    if (deleted.empty() || added.empty())
        throw std::invalid_argument("rewiring_check: need s, t >= 1");
    for (int v : deleted)
        if (!g.adjacent(u, v)) throw std::invalid_argument("rewiring_check: deleted edge absent");
    for (int w : added) {
        if (w == u || g.adjacent(u, w))
            throw std::invalid_argument("rewiring_check: added edge invalid");
    }
    std::vector<int> ds = deleted, as = added;
    std::sort(ds.begin(), ds.end());
    std::sort(as.begin(), as.end());
    if (ds == as) throw std::invalid_argument("rewiring_check: endpoint sets must differ");

    SpectralResult base = spectral_radius(g, tol);
    double sum_del = 0.0, sum_add = 0.0;
    for (int v : deleted) sum_del += base.perron[static_cast<size_t>(v)];
    for (int w : added) sum_add += base.perron[static_cast<size_t>(w)];
    if (sum_add < sum_del)
        throw std::invalid_argument("rewiring_check: Perron-weight hypothesis not satisfied");

    Graph rewired = g;
    for (int v : deleted) rewired.remove_edge(u, v);
    for (int w : added) rewired.add_edge(u, w);
    SpectralResult after = spectral_radius(rewired, tol);
    return after.rho - base.rho > 10.0 * tol;
}

std::vector<std::vector<long long>> b1_matrix(int n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("b1_matrix: n must be even, >= 6");
    long long h = n / 2;
    return {{0, 0, h},
            {0, 1, h},
            {1, h - 1, 0}};
}

std::vector<std::vector<long long>> b7_matrix(int n) {
    if (n % 2 != 0) throw std::invalid_argument("b7_matrix: n must be even");
    long long h = n / 2;
    return {{0, 6, 0, 0, 0, h},
            {1, 5, 1, 0, 0, h},
            {0, 2, 0, 5, 0, h},
            {0, 0, 3, 4, 0, h},
            {0, 0, 0, 0, 7, h},
            {1, 6, 3, 5, h - 15, 0}};
}

std::vector<std::vector<long long>> bk_matrix(int k, int n) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("bk_matrix: k must be odd, >= 3");
    if (n % 2 != 0) throw std::invalid_argument("bk_matrix: n must be even");
    long long h = (k - 1) / 2, h3 = (k - 3) / 2, hp = (k + 1) / 2, half = n / 2;
    return {{0, h, h, 0, 0, 0, 0, half},
            {1, h3, h, 1, 0, 0, 0, half},
            {1, h, h3, 0, 1, 0, 0, half},
            {0, h, 0, 0, 0, hp, 0, half},
            {0, 0, 1, 0, h3, hp, 0, half},
            {0, 0, 0, 1, h, h, 0, half},
            {0, 0, 0, 0, 0, 0, k, half},
            {1, h, h, 1, h, hp, half - 2 * k - 1, 0}};
}

} // namespace spexlab
