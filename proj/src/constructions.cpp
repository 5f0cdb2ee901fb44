#include "spexlab/constructions.hpp"

#include <stdexcept>
#include <string>

namespace spexlab {

void FamilySpec::validate() const {
    if (k < 1) throw std::invalid_argument("FamilySpec: k must be positive");
    if ((static_cast<long long>(k) * n) % 2 == 0)
        throw std::invalid_argument("FamilySpec: nearly k-regular graphs need k*n odd");
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph star(int n) {
    Graph g(n);
    for (int u = 1; u < n; ++u) g.add_edge(0, u);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph matching(int m) {
    Graph g(m);
    for (int u = 0; u + 1 < m; u += 2) g.add_edge(u, u + 1);
    return g;
}

Graph turan(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan: need r >= 1");
    Graph g(n);
    // vertex v belongs to part v % r; parts differ in size by at most one
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % r != v % r) g.add_edge(u, v);
    return g;
}

Graph fan(int ell) {
    if (ell < 4) throw std::invalid_argument("fan: defined for ell >= 4");
    return join(complete(1), path(ell));
}

PartitionedGraph q_star_parts(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("q_star: k must be odd and >= 3");
    int half = (k - 1) / 2;
    // layout: 0 = u; 1..k-1 = clique; k = w; then small clique side (half
    // vertices), then large clique side (half+1 vertices); order 2k+1
    int w = k;
    int p0 = k + 1;
    int s0 = p0 + half;
    int n = 2 * k + 1;
    Graph g(n);
    for (int i = 1; i <= k - 1; ++i) {
        g.add_edge(0, i);
        for (int j = i + 1; j <= k - 1; ++j) g.add_edge(i, j);
    }
    // the two clique sides together form a complete graph on k vertices
    for (int a = p0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    for (int s = s0; s < n; ++s) g.add_edge(w, s);
    for (int i = 1; i <= half; ++i) g.add_edge(w, i);
    for (int j = 0; j < half; ++j) g.add_edge(half + 1 + j, p0 + j);

    PartitionedGraph out;
    out.graph = g;
    uint64_t attached = 0, matched = 0, small = 0, large = 0;
    for (int i = 1; i <= half; ++i) attached |= 1ull << i;
    for (int i = half + 1; i <= k - 1; ++i) matched |= 1ull << i;
    for (int i = p0; i < s0; ++i) small |= 1ull << i;
    for (int i = s0; i < n; ++i) large |= 1ull << i;
    out.parts = {1ull, attached, matched, 1ull << w, small, large};
    return out;
}

Graph q_star(int k) { return q_star_parts(k).graph; }

PartitionedGraph q_double_star_parts() {
    // layout: 0 = u; 1..6 = K_6; 7..9 = independent triple; 10..14 = K_5
    Graph g(15);
    for (int i = 1; i <= 6; ++i) {
        g.add_edge(0, i);
        for (int j = i + 1; j <= 6; ++j) g.add_edge(i, j);
    }
    for (int a = 10; a <= 14; ++a)
        for (int b = a + 1; b <= 14; ++b) g.add_edge(a, b);
    for (int t = 7; t <= 9; ++t)
        for (int f = 10; f <= 14; ++f) g.add_edge(t, f);
    // each triple vertex takes two clique vertices; the six endpoints are
    // pairwise distinct so every K_6 vertex ends with degree 7
    for (int i = 0; i < 3; ++i) {
        g.add_edge(7 + i, 1 + 2 * i);
        g.add_edge(7 + i, 2 + 2 * i);
    }
    PartitionedGraph out;
    out.graph = g;
    uint64_t k6 = 0, triple = 0, k5 = 0;
    for (int i = 1; i <= 6; ++i) k6 |= 1ull << i;
    for (int i = 7; i <= 9; ++i) triple |= 1ull << i;
    for (int i = 10; i <= 14; ++i) k5 |= 1ull << i;
    out.parts = {1ull, k6, triple, k5};
    return out;
}

Graph q_double_star() { return q_double_star_parts().graph; }

Graph regular_graph(int m, int k) {
    if (k < 1 || m <= k)
        throw std::invalid_argument("regular_graph: need m >= k+1");
    if ((static_cast<long long>(k) * m) % 2 != 0)
        throw std::invalid_argument("regular_graph: k*m must be even");
    Graph g(m);
    for (int off = 1; off <= k / 2; ++off)
        for (int v = 0; v < m; ++v) {
            int u = (v + off) % m;
            if (!g.adjacent(v, u)) g.add_edge(v, u);
        }
    if (k % 2 == 1)
        for (int v = 0; v < m / 2; ++v) g.add_edge(v, v + m / 2);
    return g;
}

namespace {
// partition m into sizes within [k+1, cap] with each k*size even,
// largest-first with backtracking
bool spread_partition(int m, int k, int cap, std::vector<int>& sizes) {
    if (m == 0) return true;
    for (int s = std::min(m, cap); s >= k + 1; --s) {
        if ((static_cast<long long>(k) * s) % 2 != 0) continue;
        sizes.push_back(s);
        if (spread_partition(m - s, k, cap, sizes)) return true;
        sizes.pop_back();
    }
    return false;
}

Graph build_spread(const std::vector<int>& sizes, int k) {
    Graph g(0);
    for (int s : sizes) g = disjoint_union(g, regular_graph(s, k));
    return g;
}

// k-regular P_ell-free graph of order m: components of order at most 2k
// when possible, otherwise any component orders below the path bound
Graph regular_p_free(int m, int k, int ell) {
    std::vector<int> sizes;
    if (spread_partition(m, k, 2 * k, sizes)) return build_spread(sizes, k);
    int cap = std::min(2 * k + 2, ell - 1);
    if (spread_partition(m, k, cap, sizes)) return build_spread(sizes, k);
    throw std::invalid_argument(
        "no k-regular P-free graph of order " + std::to_string(m) +
        " with k = " + std::to_string(k));
}
} // namespace

Graph regular_spread(int m, int k) {
    if (m < 0 || k < 1) throw std::invalid_argument("regular_spread: bad parameters");
    std::vector<int> sizes;
    if (!spread_partition(m, k, 2 * k, sizes))
        throw std::invalid_argument(
            "regular_spread: no partition of " + std::to_string(m) +
            " into component orders in [" + std::to_string(k + 1) + ", " +
            std::to_string(2 * k) + "] with k*order even");
    return build_spread(sizes, k);
}

PartitionedGraph nearly_regular_v_family_parts(int n, int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("nearly_regular_v_family: k must be odd, >= 3");
    if (n % 2 == 0)
        throw std::invalid_argument("nearly_regular_v_family: n must be odd (k*n odd)");
    int special_order = 2 * k + 1;
    if (n < special_order)
        throw std::invalid_argument("nearly_regular_v_family: n below special component order");
    PartitionedGraph special = k == 7 ? q_double_star_parts() : q_star_parts(k);
    Graph rest = regular_spread(n - special_order, k);
    PartitionedGraph out;
    out.graph = disjoint_union(special.graph, rest);
    out.parts = special.parts;
    if (rest.order() > 0) {
        uint64_t mask = 0;
        for (int v = special_order; v < n; ++v) mask |= 1ull << v;
        out.parts.push_back(mask);
    }
    return out;
}

Graph nearly_regular_v_family(int n, int k) {
    return nearly_regular_v_family_parts(n, k).graph;
}

int fan_regularity_parameter(int ell) {
    if (ell < 4) throw std::invalid_argument("fan parameter: ell >= 4 required");
    return ell % 2 == 1 ? (ell - 3) / 2 : (ell - 2) / 2;
}

std::vector<int> spex_candidate_left_sizes(int n, int ell) {
    int k = fan_regularity_parameter(ell);
    if (k % 2 == 0) {
        if (n % 2 == 0) return {n / 2};
        return {(n - 1) / 2, (n + 1) / 2};
    }
    switch (n % 4) {
        case 0: return {n / 2};
        case 1: return {(n - 1) / 2};
        case 3: return {(n + 1) / 2};
        default:  // n == 2 (mod 4)
            if (k == 1) return {n / 2};
            return {n / 2 - 1, n / 2 + 1};
    }
}

std::vector<Graph> spex_candidate(int n, int ell) {
    int k = fan_regularity_parameter(ell);
    std::vector<Graph> out;
    for (int L : spex_candidate_left_sizes(n, ell)) {
        if (L >= n)
            throw std::invalid_argument("spex_candidate: n too small");
        Graph inner;
        if (L % 2 == 1 && k == 1) {
            // the only odd-|L| row with odd k: nearly 1-regular, K_1 plus a matching
            inner = disjoint_union(empty_graph(1), matching(L - 1));
        } else {
            inner = regular_p_free(L, k, ell);
        }
        out.push_back(join(inner, empty_graph(n - L)));
    }
    return out;
}

} // namespace spexlab
