#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <utility>

namespace spexlab {

// Undirected simple graph on at most 64 vertices; one bitset word per row.
// All library operations treat Graph values as immutable; add_edge/remove_edge
// exist for construction code only.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    uint64_t neighbors(int u) const { return adj_[u]; }
    uint64_t vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int u) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;   // descending

    Graph induced(uint64_t vertex_set) const;
    Graph complement() const;

    bool is_connected() const;
    std::vector<uint64_t> components() const;   // vertex masks, sorted by lowest vertex

    // Relabel: vertex v of the result is perm[v] of *this.
    Graph relabeled(const std::vector<int>& perm_to_old) const;

    friend Graph disjoint_union(const Graph& a, const Graph& b);
    friend Graph join(const Graph& a, const Graph& b);

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;

    void check_vertex(int u) const;
};

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// Standard graph6 serialization (bit-exact, column-major upper triangle).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

// Canonical form: graph6 string of a canonically relabeled copy.
// Equal canonical forms <=> isomorphic graphs. Capped at 16 vertices.
struct CanonicalForm {
    std::string bytes;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

// Canonical labeling result with automorphism orbits (used by enumeration).
struct CanonicalLabeling {
    std::vector<int> perm_to_old;   // canonical position -> original vertex
    std::vector<int> orbit;         // orbit representative per vertex
};
CanonicalLabeling canonical_labeling(const Graph& g);

// Canonical form of the pair (g, marked vertex): equal strings <=> an
// isomorphism maps one marked vertex to the other.
std::string marked_canonical_form(const Graph& g, int marked);

// Exhaustive permutation-search isomorphism test (small-order oracle).
bool is_isomorphic_naive(const Graph& a, const Graph& b);

} // namespace spexlab
