#include "spexlab/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace spexlab {

namespace {

constexpr int kCanonCap = 20;

// Backtracking canonical labeling over color refinements. Leaves are discrete
// colorings; the lexicographically smallest relabeled adjacency bit string
// wins. Siblings inside a target cell are skipped when a discovered
// automorphism fixing every individualized vertex maps them to an already
// tried sibling (sound: such an automorphism maps the whole subtree onto an
// explored one).
struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    std::array<uint64_t, 3> best_bits{};
    std::vector<int> best_perm;                  // canonical position -> vertex
    std::vector<std::vector<int>> gens;          // discovered automorphisms

    explicit CanonSearch(const Graph& gr) : g(gr), n(gr.order()) {}

    // Stable refinement: repeatedly re-rank vertices by
    // (current color, sorted neighbor colors) until the partition stops
    // splitting. Color values are the rank of the vertex's class.
    void refine(std::vector<int>& color) const {
        std::vector<std::pair<std::vector<int>, int>> key(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                auto& k = key[v].first;
                k.clear();
                k.push_back(color[v]);
                for (uint64_t s = g.neighbors(v); s;) {
                    int u = std::countr_zero(s);
                    s &= s - 1;
                    k.push_back(color[u]);
                }
                std::sort(k.begin() + 1, k.end());
                key[v].second = v;
            }
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return key[a].first < key[b].first;
            });
            std::vector<int> next(n);
            int classes = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && key[order[i]].first != key[order[i - 1]].first) ++classes;
                next[order[i]] = classes;
            }
            bool changed = next != color;
            color = std::move(next);
            if (!changed) return;
        }
    }

    std::array<uint64_t, 3> leaf_bits(const std::vector<int>& perm) const {
        std::array<uint64_t, 3> bits{};
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.adjacent(perm[i], perm[j]))
                    bits[k >> 6] |= 1ull << (63 - (k & 63));
        return bits;
    }

    void record_automorphism(const std::vector<int>& perm) {
        std::vector<int> alpha(n);
        for (int p = 0; p < n; ++p) alpha[perm[p]] = best_perm[p];
        bool identity = true;
        for (int v = 0; v < n; ++v)
            if (alpha[v] != v) { identity = false; break; }
        if (identity) return;
        if (gens.size() < 64 && std::find(gens.begin(), gens.end(), alpha) == gens.end())
            gens.push_back(alpha);
    }

    void search(std::vector<int> color, std::vector<int>& base) {
        refine(color);
        int cell_color = -1, cell_size = 0;
        for (int c = 0;; ++c) {
            cell_size = 0;
            for (int v = 0; v < n; ++v) cell_size += color[v] == c;
            if (cell_size == 0) { cell_color = -1; break; }
            if (cell_size > 1) { cell_color = c; break; }
        }
        if (cell_color < 0) {
            std::vector<int> perm(n);
            for (int v = 0; v < n; ++v) perm[color[v]] = v;
            auto bits = leaf_bits(perm);
            if (!have_best || bits < best_bits) {
                have_best = true;
                best_bits = bits;
                best_perm = perm;
            } else if (bits == best_bits) {
                record_automorphism(perm);
            }
            return;
        }

        // union-find over vertices from generators fixing the current base
        std::vector<int> uf(n);
        for (int v = 0; v < n; ++v) uf[v] = v;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        auto apply_gens = [&]() {
            for (const auto& a : gens) {
                bool fixes = true;
                for (int b : base)
                    if (a[b] != b) { fixes = false; break; }
                if (!fixes) continue;
                for (int v = 0; v < n; ++v) {
                    int r1 = find(v), r2 = find(a[v]);
                    if (r1 != r2) uf[r1] = r2;
                }
            }
        };

        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell_color) continue;
            apply_gens();
            bool skip = false;
            for (int u : tried)
                if (find(u) == find(v)) { skip = true; break; }
            if (skip) continue;
            tried.push_back(v);
            std::vector<int> child(n);
            for (int w = 0; w < n; ++w)
                child[w] = 2 * color[w] + (color[w] == cell_color && w != v ? 1 : 0);
            base.push_back(v);
            search(std::move(child), base);
            base.pop_back();
        }
    }

    void run(const std::vector<int>& initial) {
        std::vector<int> base;
        search(initial, base);
    }
};

std::vector<int> compute_orbits(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> uf(n);
    for (int v = 0; v < n; ++v) uf[v] = v;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& a : gens)
        for (int v = 0; v < n; ++v) {
            int r1 = find(v), r2 = find(a[v]);
            if (r1 == r2) continue;
            if (r1 < r2) uf[r2] = r1; else uf[r1] = r2;
        }
    std::vector<int> orbit(n);
    for (int v = 0; v < n; ++v) orbit[v] = find(v);
    return orbit;
}

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    int n = g.order();
    if (n > kCanonCap)
        throw std::invalid_argument("canonical_labeling: order exceeds cap of 20");
    CanonicalLabeling out;
    if (n == 0) return out;
    CanonSearch cs(g);
    cs.run(std::vector<int>(n, 0));
    out.perm_to_old = cs.best_perm;
    out.orbit = compute_orbits(n, cs.gens);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return CanonicalForm{graph6_encode(g)};
    auto lab = canonical_labeling(g);
    return CanonicalForm{graph6_encode(g.relabeled(lab.perm_to_old))};
}

std::string marked_canonical_form(const Graph& g, int marked) {
    int n = g.order();
    if (n > kCanonCap)
        throw std::invalid_argument("marked_canonical_form: order exceeds cap of 20");
    if (marked < 0 || marked >= n)
        throw std::out_of_range("marked_canonical_form: bad vertex");
    CanonSearch cs(g);
    std::vector<int> initial(n, 1);
    initial[marked] = 0;
    cs.run(initial);
    // the marked vertex always lands at canonical position 0
    return graph6_encode(g.relabeled(cs.best_perm));
}

} // namespace spexlab
