#include "spexlab/verify.hpp"

#include "spexlab/constructions.hpp"
#include "spexlab/forbid.hpp"
#include "spexlab/roots.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/walks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace spexlab {

namespace {

// total degree deficiency toward k-regularity
long long deficiency(const Graph& g, int k) {
    long long d = 0;
    for (int v = 0; v < g.order(); ++v) d += k - g.degree(v);
    return d;
}

// hereditary feasibility filter for growing a (nearly) k-regular graph of
// order `target`: remaining vertices can add at most k endpoints each
GraphPredicate regular_target_predicate(int k, int target, bool path_free, int ell) {
    return [k, target, path_free, ell](const Graph& g) {
        if (g.max_degree() > k) return false;
        if (deficiency(g, k) - 1 > static_cast<long long>(k) * (target - g.order()))
            return false;
        if (path_free && has_path(g, ell)) return false;
        return true;
    };
}

bool degree_sequence_is_nearly(const Graph& g, int k) {
    int low = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == k) continue;
        if (d == k - 1) ++low;
        else return false;
    }
    return low == 1;
}

bool degree_sequence_is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

} // namespace

BoundedOrderReport verify_bounded_order(int k, int n) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("verify_bounded_order: k must be odd, >= 3");
    if (n <= 2 * k + 1 || n % 2 == 0)
        throw std::invalid_argument("verify_bounded_order: need odd n > 2k+1");
    if (n > 12)
        throw std::invalid_argument("verify_bounded_order: exhaustive mode capped at n = 12");

    BoundedOrderReport rep;
    rep.k = k;
    rep.n = n;
    EnumerateOptions opts;
    opts.order = n;
    opts.connected_only = true;
    opts.predicate = regular_target_predicate(k, n, false, 0);
    for (const Graph& g : enumerate_graphs_ex(opts)) {
        if (!degree_sequence_is_nearly(g, k)) continue;
        ++rep.nearly_regular_connected;
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == k - 1) u = v;
        Graph nb = g.induced(g.neighbors(u));
        if (nb.edge_count() != nb.order() * (nb.order() - 1) / 2) continue;
        ++rep.clique_neighborhood;
        if (has_path(g, 2 * k + 3)) ++rep.containing_path;
        else rep.counterexamples.push_back(canonical_form(g).bytes);
    }
    rep.all_contain_path = rep.clique_neighborhood == rep.containing_path;
    return rep;
}

namespace {

struct FamilyMembers {
    std::vector<Graph> graphs;
    std::vector<bool> special_is_qstar;   // whether the low-degree component
                                          // is the q_star of that k
};

FamilyMembers build_family_members(int k, int n) {
    if (k != 3)
        throw std::invalid_argument("family enumeration is tuned for k = 3");
    if (n % 2 == 0 || n < 2 * k + 1)
        throw std::invalid_argument("family order must be odd, at least 2k+1");
    if (n > 19)
        throw std::invalid_argument("family enumeration capped at n = 19");
    int ell = 2 * k + 3;

    // connected P_{2k+3}-free components with the right degree profiles
    std::vector<std::vector<Graph>> regular_by_order(static_cast<size_t>(n) + 1);
    std::vector<std::vector<Graph>> nearly_by_order(static_cast<size_t>(n) + 1);
    for (int m = k + 1; m <= n; ++m) {
        EnumerateOptions opts;
        opts.order = m;
        opts.connected_only = true;
        opts.predicate = regular_target_predicate(k, m, true, ell);
        for (const Graph& g : enumerate_graphs_ex(opts)) {
            if (m % 2 == 0 && degree_sequence_is_regular(g, k))
                regular_by_order[static_cast<size_t>(m)].push_back(g);
            else if (m % 2 == 1 && degree_sequence_is_nearly(g, k))
                nearly_by_order[static_cast<size_t>(m)].push_back(g);
        }
    }

    // assemble all members: one nearly-regular component, k-regular rest,
    // multisets over (order, index) to avoid repeats
    FamilyMembers out;
    std::string qstar_canon = canonical_form(q_star(k)).bytes;

    struct Item { int order; size_t idx; };
    std::vector<Item> regular_items;
    for (int m = 4; m <= n; ++m)
        for (size_t i = 0; i < regular_by_order[static_cast<size_t>(m)].size(); ++i)
            regular_items.push_back({m, i});

    auto assemble = [&](auto&& self, const Graph& acc, int remaining, size_t min_item) -> void {
        if (remaining == 0) {
            out.graphs.push_back(acc);
            return;
        }
        for (size_t t = min_item; t < regular_items.size(); ++t) {
            const auto& it = regular_items[t];
            if (it.order > remaining) continue;
            self(self, disjoint_union(acc, regular_by_order[static_cast<size_t>(it.order)][it.idx]),
                 remaining - it.order, t);
        }
    };

    for (int q = k + 2; q <= n; q += 2) {
        for (const Graph& special : nearly_by_order[static_cast<size_t>(q)]) {
            size_t before = out.graphs.size();
            assemble(assemble, special, n - q, 0);
            bool isv = q == 2 * k + 1 && canonical_form(special).bytes == qstar_canon;
            for (size_t i = before; i < out.graphs.size(); ++i)
                out.special_is_qstar.push_back(isv);
        }
    }
    return out;
}

} // namespace

std::vector<Graph> nearly_regular_family_members(int k, int n) {
    return build_family_members(k, n).graphs;
}

WalkLemmaReport verify_walk_lemma(int k, int n) {
    if (n < 4 * k + 3)
        throw std::invalid_argument("verify_walk_lemma: need n >= 4k+3");
    FamilyMembers members = build_family_members(k, n);
    std::vector<Graph>& family = members.graphs;
    std::vector<bool>& is_v_member = members.special_is_qstar;

    WalkLemmaReport rep;
    rep.k = k;
    rep.n = n;
    rep.family_size = family.size();
    for (bool b : is_v_member) rep.expected_count += b;
    if (family.empty()) throw std::runtime_error("verify_walk_lemma: empty family");

    ExInfinityResult ex = ex_infinity_indices(family);
    rep.survivor_count = ex.survivors.size();
    rep.stable_after_level = ex.stable_after_level;
    std::vector<size_t> expected;
    for (size_t i = 0; i < family.size(); ++i)
        if (is_v_member[i]) expected.push_back(i);
    rep.survivors_equal_v_family = ex.survivors == expected;
    return rep;
}

SpecCompareReport verify_spec_compare(int k, int n) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("verify_spec_compare: k must be odd, >= 3");
    if (n % 4 != 2)
        throw std::invalid_argument("verify_spec_compare: need n == 2 (mod 4)");
    if (n > 60)
        throw std::invalid_argument("verify_spec_compare: capped at n = 60");
    SpecCompareReport rep;
    rep.k = k;
    rep.n = n;
    rep.bound = 0.5 * (k + std::sqrt(static_cast<double>(k) * k + static_cast<double>(n) * n - 4));

    PartitionedGraph member;
    try {
        member = nearly_regular_v_family_parts(n / 2, k);
    } catch (const std::invalid_argument& e) {
        rep.reason = e.what();
        return rep;
    }
    rep.feasible = true;

    Graph g = join(member.graph, Graph(n / 2));
    std::vector<uint64_t> parts = member.parts;
    uint64_t rmask = 0;
    for (int v = n / 2; v < n; ++v) rmask |= 1ull << v;
    parts.push_back(rmask);

    QuotientMatrix q = equitable_quotient(g, parts);
    if (member.graph.order() > 2 * k + 1) {
        auto reference = k == 7 ? b7_matrix(n) : bk_matrix(k, n);
        rep.quotient_matches_reference = q.entries == reference;
    } else {
        rep.quotient_matches_reference = true;  // no spread part at this size
    }

    IntPolynomial h = char_poly_exact_ll(q.entries);
    // bound is the largest root of x^2 - kx - (n^2/4 - 1)
    IntPolynomial gpoly = IntPolynomial::from_ll(
        {-(static_cast<long long>(n) * n / 4 - 1), -static_cast<long long>(k), 1});
    rep.below_bound_exact = compare_largest_roots(h, gpoly) < 0;

    RootInterval root = largest_real_root(h, 80);
    rep.rho_exact = root.decimal(15);
    rep.rho_float = spectral_radius(g).rho;
    rep.quotient_float_gap = std::abs(rep.rho_float - root.midpoint_double());
    rep.margin = rep.bound - rep.rho_float;
    rep.pass = rep.feasible && rep.below_bound_exact && rep.margin > 0 &&
               rep.quotient_float_gap <= 1e-8 && rep.quotient_matches_reference;
    return rep;
}

int lower_bound_left_size(int k, int n) {
    if (k % 2 == 1) {
        switch (n % 4) {
            case 0: return n / 2;
            case 1: return (n - 1) / 2;
            case 2: return n / 2 + 1;
            default: return (n + 1) / 2;
        }
    }
    return n % 2 == 0 ? n / 2 : (n + 1) / 2;
}

LowerBoundReport verify_lower_bounds(int k, int n) {
    if (k < 1) throw std::invalid_argument("verify_lower_bounds: k >= 1");
    if (n > 60) throw std::invalid_argument("verify_lower_bounds: capped at n = 60");
    LowerBoundReport rep;
    rep.k = k;
    rep.n = n;
    rep.left_size = lower_bound_left_size(k, n);
    int L = rep.left_size, R = n - L;
    Graph h = regular_spread(L, k);
    Graph g = join(h, Graph(R));

    rep.four_lr = 4ll * L * R;
    rep.shift = static_cast<long long>(n) * n - rep.four_lr;
    rep.fan_free = !has_fan(g, 2 * k + 3);
    rep.observation_holds = check_observation1(h, k, 2 * k + 3);

    QuotientMatrix q = equitable_quotient(g, {h.vertex_mask(),
                                              g.vertex_mask() & ~h.vertex_mask()});
    IntPolynomial cp = char_poly_exact_ll(q.entries);
    IntPolynomial expected = IntPolynomial::from_ll(
        {-static_cast<long long>(L) * R, -static_cast<long long>(k), 1});
    rep.quotient_poly_matches = cp == expected;

    rep.rho_float = spectral_radius(g).rho;
    rep.closed_form = 0.5 * (k + std::sqrt(static_cast<double>(k) * k + static_cast<double>(rep.four_lr)));
    rep.diff = std::abs(rep.rho_float - rep.closed_form);
    rep.pass = rep.fan_free && rep.observation_holds && rep.quotient_poly_matches &&
               rep.diff <= 1e-9;
    return rep;
}

} // namespace spexlab
