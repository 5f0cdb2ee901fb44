#include "spexlab/graph.hpp"

#include <bit>
#include <algorithm>
#include <stdexcept>

namespace spexlab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("Graph: order must be in [0, 64]");
    adj_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: no loops in a simple graph");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += std::popcount(adj_[u]);
    return total / 2;
}

int Graph::degree(int u) const {
    check_vertex(u);
    return std::popcount(adj_[u]);
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = kMaxOrder;
    for (int u = 0; u < n_; ++u) best = std::min(best, std::popcount(adj_[u]));
    return best;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree: empty graph");
    int best = 0;
    for (int u = 0; u < n_; ++u) best = std::max(best, std::popcount(adj_[u]));
    return best;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int u = 0; u < n_; ++u) d[u] = std::popcount(adj_[u]);
    std::sort(d.rbegin(), d.rend());
    return d;
}

Graph Graph::induced(uint64_t vertex_set) const {
    vertex_set &= vertex_mask();
    std::vector<int> verts;
    for (uint64_t s = vertex_set; s;) {
        int v = std::countr_zero(s);
        verts.push_back(v);
        s &= s - 1;
    }
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::complement() const {
    Graph out(n_);
    uint64_t mask = vertex_mask();
    for (int u = 0; u < n_; ++u)
        out.adj_[u] = (~adj_[u]) & mask & ~(1ull << u);
    return out;
}

std::vector<uint64_t> Graph::components() const {
    std::vector<uint64_t> out;
    uint64_t seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1u) continue;
        uint64_t comp = 1ull << s, frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[v];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    return components().size() == 1;
}

Graph Graph::relabeled(const std::vector<int>& perm_to_old) const {
    Graph out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(perm_to_old[i], perm_to_old[j])) out.add_edge(i, j);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxOrder)
        throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph out(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u) out.adj_[u] = a.adj_[u];
    for (int u = 0; u < b.order(); ++u)
        out.adj_[a.order() + u] = b.adj_[u] << a.order();
    return out;
}

Graph join(const Graph& a, const Graph& b) {
    Graph out = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = a.order(); v < out.order(); ++v)
            out.add_edge(u, v);
    return out;
}

bool is_isomorphic_naive(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    // map vertex i of a to perm[i] of b
    std::vector<int> stack;
    std::vector<bool> used(n, false);
    std::vector<int> assign(n, -1);
    // depth-first over partial injections with adjacency consistency
    int depth = 0;
    std::vector<int> next_try(n, 0);
    while (depth >= 0) {
        if (depth == n) return true;
        bool advanced = false;
        for (int cand = next_try[depth]; cand < n; ++cand) {
            if (used[cand]) continue;
            if (b.degree(cand) != a.degree(depth)) continue;
            bool ok = true;
            for (int prev = 0; prev < depth; ++prev) {
                if (a.adjacent(depth, prev) != b.adjacent(cand, assign[prev])) { ok = false; break; }
            }
            if (!ok) continue;
            assign[depth] = cand;
            used[cand] = true;
            next_try[depth] = cand + 1;
            ++depth;
            if (depth < n) next_try[depth] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            --depth;
            if (depth >= 0) { used[assign[depth]] = false; assign[depth] = -1; }
        }
    }
    return false;
}

} // namespace spexlab
