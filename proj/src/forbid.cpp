#include "spexlab/forbid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

namespace spexlab {

namespace {

// Drop surplus open twins: of a set of pairwise nonadjacent vertices sharing
// one neighborhood N, a path can visit at most |N|+1, so extra copies never
// change path containment. Iterated to a fixpoint.
Graph twin_reduce(const Graph& g) {
    Graph cur = g;
    for (;;) {
        std::map<uint64_t, std::vector<int>> classes;
        for (int v = 0; v < cur.order(); ++v) classes[cur.neighbors(v)].push_back(v);
        uint64_t drop = 0;
        for (const auto& [mask, verts] : classes) {
            size_t cap = static_cast<size_t>(std::popcount(mask)) + 1;
            for (size_t i = cap; i < verts.size(); ++i) drop |= 1ull << verts[i];
        }
        if (!drop) return cur;
        cur = cur.induced(cur.vertex_mask() & ~drop);
    }
}

// longest path within a connected graph of order <= 24 by subset DP;
// early exit once `target` vertices are reached (target 0 = no early exit)
int longest_path_dp(const Graph& g, int target) {
    int m = g.order();
    std::vector<uint32_t> local(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) local[static_cast<size_t>(v)] = static_cast<uint32_t>(g.neighbors(v));
    std::vector<uint32_t> ends(1ull << m, 0);
    int best = m > 0 ? 1 : 0;
    if (target > 0 && best >= target) return best;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        uint32_t e;
        if ((mask & (mask - 1)) == 0) {
            e = mask;
        } else {
            e = 0;
            for (uint32_t rest = mask; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (ends[mask ^ (1u << v)] & local[static_cast<size_t>(v)]) e |= 1u << v;
            }
        }
        ends[mask] = e;
        if (e) {
            int size = std::popcount(mask);
            if (size > best) {
                best = size;
                if (target > 0 && best >= target) return best;
            }
        }
    }
    return best;
}

// pruned DFS fallback for components larger than the DP cap
struct PathDfs {
    const Graph& g;
    int target;   // stop as soon as this many vertices are on a path; 0 = none
    int best = 0;

    bool extend(int v, uint64_t visited, int len) {
        if (len > best) best = len;
        if (target > 0 && best >= target) return true;
        // reachability prune: the path can only grow into vertices reachable
        // through unvisited territory
        uint64_t frontier = g.neighbors(v) & ~visited;
        uint64_t reach = frontier;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u);
            }
            frontier = next & ~visited & ~reach;
            reach |= frontier;
        }
        if (target > 0 && len + std::popcount(reach) < target) return false;
        for (uint64_t s = g.neighbors(v) & ~visited; s;) {
            int u = std::countr_zero(s);
            s &= s - 1;
            if (extend(u, visited | (1ull << u), len + 1)) return true;
        }
        return false;
    }

    int run() {
        for (int v = 0; v < g.order(); ++v) {
            if (extend(v, 1ull << v, 1)) break;
        }
        return best;
    }
};

int longest_path_component(const Graph& comp, int target) {
    if (comp.order() <= 24) return longest_path_dp(comp, target);
    PathDfs dfs{comp, target};
    return dfs.run();
}

int longest_path_impl(const Graph& g, int target) {
    Graph reduced = twin_reduce(g);
    int best = 0;
    for (uint64_t mask : reduced.components()) {
        Graph comp = reduced.induced(mask);
        int t = target > 0 ? target : 0;
        best = std::max(best, longest_path_component(comp, t));
        if (target > 0 && best >= target) return best;
    }
    return best;
}

} // namespace

bool has_path(const Graph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("has_path: ell must be >= 1");
    if (ell == 1) return g.order() >= 1;
    if (g.order() < ell) return false;
    return longest_path_impl(g, ell) >= ell;
}

int longest_path_order(const Graph& g) {
    return longest_path_impl(g, 0);
}

bool has_fan(const Graph& g, int ell) {
    if (ell < 4) throw std::invalid_argument("has_fan: fans need ell >= 4");
    std::vector<int> hubs;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= ell) hubs.push_back(v);
    std::sort(hubs.begin(), hubs.end(),
              [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : hubs)
        if (has_path(g.induced(g.neighbors(v)), ell)) return true;
    return false;
}

bool naive_subgraph_oracle(const Graph& h, const Graph& g) {
    if (h.order() > g.order() || g.order() > 10)
        throw std::invalid_argument("naive_subgraph_oracle: requires |H| <= |G| <= 10");
    int hn = h.order(), gn = g.order();
    if (hn == 0) return true;
    // embed H vertices in descending-degree order
    std::vector<int> order(static_cast<size_t>(hn));
    for (int i = 0; i < hn; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> image(static_cast<size_t>(hn), -1);
    uint64_t used = 0;

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == hn) return true;
        int hv = order[static_cast<size_t>(depth)];
        for (int gv = 0; gv < gn; ++gv) {
            if ((used >> gv) & 1u) continue;
            if (g.degree(gv) < h.degree(hv)) continue;
            bool ok = true;
            for (int prev = 0; prev < depth; ++prev) {
                int hu = order[static_cast<size_t>(prev)];
                if (h.adjacent(hv, hu) && !g.adjacent(gv, image[static_cast<size_t>(hu)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<size_t>(hv)] = gv;
            used |= 1ull << gv;
            if (self(self, depth + 1)) return true;
            used &= ~(1ull << gv);
            image[static_cast<size_t>(hv)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool check_observation1(const Graph& h, int k, int ell) {
    if (ell != 2 * k + 3 && ell != 2 * k + 2)
        throw std::invalid_argument("check_observation1: ell must be 2k+3 or 2k+2");
    if (h.order() < 1 || h.order() + 2 * k + 3 > 40)
        throw std::invalid_argument("check_observation1: order out of range");
    Graph joined = join(h, Graph(2 * k + 3));
    bool fan_side = has_fan(joined, ell);
    bool structural = !(h.max_degree() <= k && !has_path(h, ell));
    return fan_side == structural;
}

} // namespace spexlab
