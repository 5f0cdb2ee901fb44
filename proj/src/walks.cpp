#include "spexlab/walks.hpp"

#include <bit>
#include <stdexcept>

namespace spexlab {

WalkProfile walk_profile(const Graph& g, int levels) {
    if (levels < 1) throw std::invalid_argument("walk_profile: need levels >= 1");
    int n = g.order();
    WalkProfile out;
    out.order = n;
    out.per_vertex.reserve(static_cast<size_t>(levels));
    out.totals.reserve(static_cast<size_t>(levels));
    std::vector<BigInt> prev(static_cast<size_t>(n), BigInt(1));
    for (int l = 1; l <= levels; ++l) {
        std::vector<BigInt> cur(static_cast<size_t>(n));
        BigInt total;
        for (int v = 0; v < n; ++v) {
            BigInt s;
            for (uint64_t nb = g.neighbors(v); nb;) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                s += prev[static_cast<size_t>(u)];
            }
            total += s;
            cur[static_cast<size_t>(v)] = std::move(s);
        }
        out.per_vertex.push_back(cur);
        out.totals.push_back(std::move(total));
        prev = std::move(cur);
    }
    return out;
}

std::vector<BigInt> walk_closed_forms(int n, int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("walk_closed_forms: k must be odd, >= 3");
    if (n % 2 == 0)
        throw std::invalid_argument("walk_closed_forms: k*n must be odd");
    BigInt N(n), K(k);
    BigInt k2 = K * K, k3 = k2 * K, k4 = k3 * K;
    return {
        N * K - BigInt(1),
        (N - BigInt(1)) * k2 + (K - BigInt(1)) * (K - BigInt(1)),
        N * k3 - BigInt(3) * k2 + BigInt(2) * K,
        N * k4 - BigInt(4) * k3 + BigInt(3) * k2 + K - BigInt(1),
    };
}

namespace {

// advance one walk level in place, returning the new total
BigInt advance(const Graph& g, std::vector<BigInt>& w) {
    int n = g.order();
    std::vector<BigInt> next(static_cast<size_t>(n));
    BigInt total;
    for (int v = 0; v < n; ++v) {
        BigInt s;
        for (uint64_t nb = g.neighbors(v); nb;) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            s += w[static_cast<size_t>(u)];
        }
        total += s;
        next[static_cast<size_t>(v)] = std::move(s);
    }
    w = std::move(next);
    return total;
}

} // namespace

WalkComparison walk_compare(const Graph& g1, const Graph& g2) {
    int cutoff = g1.order() + g2.order();
    std::vector<BigInt> w1(static_cast<size_t>(g1.order()), BigInt(1));
    std::vector<BigInt> w2(static_cast<size_t>(g2.order()), BigInt(1));
    for (int l = 1; l <= cutoff; ++l) {
        BigInt t1 = advance(g1, w1);
        BigInt t2 = advance(g2, w2);
        int c = BigInt::cmp(t1, t2);
        if (c != 0) {
            WalkComparison out;
            out.ordering = c > 0 ? WalkOrdering::greater : WalkOrdering::less;
            out.first_diff_level = l;
            out.gap = c > 0 ? t1 - t2 : t2 - t1;
            return out;
        }
    }
    return {};
}

std::vector<Graph> ex_filter(const std::vector<Graph>& family, int ell) {
    if (family.empty()) throw std::invalid_argument("ex_filter: empty family");
    if (ell < 1) throw std::invalid_argument("ex_filter: need ell >= 1");
    std::vector<size_t> alive(family.size());
    for (size_t i = 0; i < family.size(); ++i) alive[i] = i;
    std::vector<std::vector<BigInt>> w(family.size());
    for (size_t i = 0; i < family.size(); ++i)
        w[i].assign(static_cast<size_t>(family[i].order()), BigInt(1));

    for (int l = 1; l <= ell && alive.size() > 1; ++l) {
        std::vector<BigInt> totals(alive.size());
        for (size_t j = 0; j < alive.size(); ++j)
            totals[j] = advance(family[alive[j]], w[alive[j]]);
        const BigInt* best = &totals[0];
        for (const auto& t : totals)
            if (*best < t) best = &t;
        std::vector<size_t> next;
        for (size_t j = 0; j < alive.size(); ++j)
            if (totals[j] == *best) next.push_back(alive[j]);
        alive = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(alive.size());
    for (size_t i : alive) out.push_back(family[i]);
    return out;
}

ExInfinityResult ex_infinity_indices(const std::vector<Graph>& family) {
    if (family.empty()) throw std::invalid_argument("ex_infinity: empty family");
    int max_order = 0;
    for (const auto& g : family) max_order = std::max(max_order, g.order());
    int cutoff = 2 * max_order;   // pairwise walk_compare cutoff bound

    ExInfinityResult out;
    std::vector<size_t> alive(family.size());
    for (size_t i = 0; i < family.size(); ++i) alive[i] = i;
    std::vector<std::vector<BigInt>> w(family.size());
    for (size_t i = 0; i < family.size(); ++i)
        w[i].assign(static_cast<size_t>(family[i].order()), BigInt(1));

    for (int l = 1; l <= cutoff && alive.size() > 1; ++l) {
        std::vector<BigInt> totals(alive.size());
        for (size_t j = 0; j < alive.size(); ++j)
            totals[j] = advance(family[alive[j]], w[alive[j]]);
        const BigInt* best = &totals[0];
        for (const auto& t : totals)
            if (*best < t) best = &t;
        std::vector<size_t> next;
        for (size_t j = 0; j < alive.size(); ++j)
            if (totals[j] == *best) next.push_back(alive[j]);
        if (next.size() < alive.size()) out.stable_after_level = l;
        alive = std::move(next);
    }
    out.survivors = std::move(alive);
    return out;
}

std::vector<Graph> ex_infinity(const std::vector<Graph>& family) {
    auto res = ex_infinity_indices(family);
    std::vector<Graph> out;
    out.reserve(res.survivors.size());
    for (size_t i : res.survivors) out.push_back(family[i]);
    return out;
}

} // namespace spexlab
