// Acceptance suite: every exit criterion, one pass/fail line each.
// Exit status is the number of failed criteria.

#include "spexlab/constructions.hpp"
#include "spexlab/forbid.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/roots.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/verify.hpp"
#include "spexlab/walks.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace spexlab;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

Graph random_graph(Rng& rng, int n, uint64_t percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

// ---- criterion 1: the order-15 walk gap --------------------------------

bool crit_walk_gap(std::string& detail) {
    WalkComparison c = walk_compare(q_double_star(), q_star(7));
    std::ostringstream os;
    os << "first_diff_level=" << c.first_diff_level << " gap=" << c.gap.to_string();
    detail = os.str();
    return c.ordering == WalkOrdering::greater && c.first_diff_level == 7 &&
           c.gap == BigInt(84);
}

// ---- criterion 2: closed-form walk totals ------------------------------

bool crit_closed_forms(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{19, 3}, {23, 3}, {29, 7}}) {
        Graph g = nearly_regular_v_family(n, k);
        WalkProfile p = walk_profile(g, 4);
        std::vector<BigInt> expect = walk_closed_forms(n, k);
        bool here = true;
        for (int l = 1; l <= 4; ++l)
            here = here && p.total(l) == expect[static_cast<size_t>(l - 1)];
        os << "(" << n << "," << k << ")" << (here ? " ok" : " MISMATCH") << " ";
        ok = ok && here;
    }
    detail = os.str();
    return ok;
}

// ---- criterion 3: quotient roots vs power iteration --------------------

bool crit_quotient_agreement(std::string& detail) {
    struct Item {
        Graph g;
        std::vector<uint64_t> parts;
        std::string label;
    };
    std::vector<Item> items;

    auto two_part_join = [&](int k, int n, const std::string& label) {
        int L = lower_bound_left_size(k, n);
        Graph h = regular_spread(L, k);
        Graph g = join(h, Graph(n - L));
        items.push_back({g, {h.vertex_mask(), g.vertex_mask() & ~h.vertex_mask()}, label});
    };
    two_part_join(1, 12, "2-part k=1 n=12");
    two_part_join(3, 20, "2-part k=3 n=20");
    two_part_join(3, 14, "2-part k=3 n=14");
    two_part_join(7, 30, "2-part k=7 n=30");
    two_part_join(1, 9, "2-part k=1 n=9");
    two_part_join(3, 21, "2-part k=3 n=21");
    two_part_join(1, 7, "2-part k=1 n=7");
    two_part_join(3, 19, "2-part k=3 n=19");
    two_part_join(2, 12, "2-part k=2 n=12");
    two_part_join(4, 20, "2-part k=4 n=20");
    two_part_join(2, 13, "2-part k=2 n=13");
    two_part_join(4, 19, "2-part k=4 n=19");

    auto b1_graph = [&](int n) {
        Graph inner = disjoint_union(Graph(1), matching(n / 2 - 1));
        Graph g = join(inner, Graph(n / 2));
        uint64_t mpart = 0;
        for (int v = 1; v < n / 2; ++v) mpart |= 1ull << v;
        uint64_t rpart = g.vertex_mask() & ~(mpart | 1ull);
        items.push_back({g, {1ull, mpart, rpart}, "3-part matching n=" + std::to_string(n)});
    };
    b1_graph(10);
    b1_graph(14);
    b1_graph(18);

    auto member_join = [&](int k, int n, const std::string& label) {
        PartitionedGraph member = nearly_regular_v_family_parts(n / 2, k);
        Graph g = join(member.graph, Graph(n / 2));
        std::vector<uint64_t> parts = member.parts;
        uint64_t rmask = 0;
        for (int v = n / 2; v < n; ++v) rmask |= 1ull << v;
        parts.push_back(rmask);
        items.push_back({g, parts, label});
    };
    member_join(3, 30, "8-part k=3 n=30");
    member_join(3, 42, "8-part k=3 n=42");
    member_join(7, 46, "6-part k=7 n=46");
    member_join(7, 58, "6-part k=7 n=58");

    items.push_back({spex_candidate(8, 5)[0],
                     {0xf, 0xf0},
                     "2-part matching n=8"});
    items.push_back({fan(4), {0b00001, 0b10010, 0b01100}, "3-part fan"});
    {
        Graph g = join(cycle(4), Graph(6));
        items.push_back({g, {0xf, 0x3f0}, "2-part cycle-join"});
    }

    bool ok = items.size() >= 20;
    double worst = 0.0;
    std::string worst_label;
    bool saw_b1 = false, saw_b7 = false, saw_bk = false;
    for (const auto& item : items) {
        QuotientMatrix q = equitable_quotient(item.g, item.parts);
        saw_b1 = saw_b1 || (q.entries.size() == 3 && q.entries == b1_matrix(item.g.order()));
        if (q.entries.size() == 6 && item.g.order() % 2 == 0)
            saw_b7 = saw_b7 || q.entries == b7_matrix(item.g.order());
        if (q.entries.size() == 8 && item.g.order() % 2 == 0)
            saw_bk = saw_bk || q.entries == bk_matrix(3, item.g.order());
        double root = largest_real_root(char_poly_exact_ll(q.entries), 80).midpoint_double();
        double rho = spectral_radius(item.g).rho;
        double diff = std::abs(root - rho);
        if (diff > worst) { worst = diff; worst_label = item.label; }
        ok = ok && diff <= 1e-8;
    }
    ok = ok && saw_b1 && saw_b7 && saw_bk;
    std::ostringstream os;
    os << items.size() << " joins, worst |quotient-power|=" << worst
       << " (" << worst_label << "), reference 3/6/8-part matrices seen: "
       << saw_b1 << saw_b7 << saw_bk;
    detail = os.str();
    return ok;
}

// ---- criterion 4: lower-bound rows -------------------------------------

bool crit_lower_bounds(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (auto [k, n] : std::vector<std::pair<int, int>>{
             {1, 12}, {3, 20},
             {3, 14}, {7, 30},
             {1, 9}, {3, 21},
             {1, 7}, {3, 19},
             {2, 12}, {4, 20},
             {2, 13}, {4, 19},
         }) {
        LowerBoundReport r = verify_lower_bounds(k, n);
        if (!r.pass) os << "(" << k << "," << n << ") FAIL diff=" << r.diff << " ";
        ok = ok && r.pass;
    }
    if (ok) os << "12 instances across all six parity rows, all exact to 1e-9";
    detail = os.str();
    return ok;
}

// ---- criterion 5: brute-force winners match the table ------------------

bool crit_spex(std::string& detail) {
    struct Row { int n, ell; };
    std::vector<Row> rows = {{6, 4}, {7, 4}, {8, 4}, {7, 5}, {8, 5}};
    bool ok = true;
    std::ostringstream os;
    for (auto [n, ell] : rows) {
        auto t0 = std::chrono::steady_clock::now();
        SpexCertificate cert = spex_bruteforce(n, ell);
        std::set<std::string> expected;
        for (const Graph& g : spex_candidate(n, ell))
            expected.insert(canonical_form(g).bytes);
        bool match = expected == std::set<std::string>(cert.winners.begin(), cert.winners.end());
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        os << "(" << n << "," << ell << ") " << (match ? "PASS" : "FAIL-with-data")
           << " classes=" << cert.stats.graphs_enumerated << " " << std::round(secs * 10) / 10
           << "s; ";
        if (n == 6 && ell == 4) ok = ok && match;
        if (!match) {
            os << "winners={";
            for (const auto& w : cert.winners) os << w << " ";
            os << "}; ";
        }
    }
    detail = os.str();
    return ok;
}

// ---- criterion 6: spectral comparison bound ----------------------------

bool crit_spec_compare(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 30}, {3, 42}, {7, 34}}) {
        SpecCompareReport r = verify_spec_compare(k, n);
        if (r.pass) {
            os << "(" << k << "," << n << ") margin=" << r.margin << " ";
        } else {
            os << "(" << k << "," << n << ") FAIL"
               << (r.feasible ? "" : std::string(" infeasible: ") + r.reason) << "; ";
            ok = false;
        }
    }
    // nearest feasible k=7 member-embedding instance, for the record
    SpecCompareReport r58 = verify_spec_compare(7, 58);
    os << "[supplementary (7,58) " << (r58.pass ? "holds" : "fails")
       << " margin=" << r58.margin << "]";
    detail = os.str();
    return ok;
}

// ---- criterion 7: exact root fight at k=1 ------------------------------

bool crit_root_fight(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (int n : {10, 14, 18}) {
        IntPolynomial h1 = char_poly_exact_ll(b1_matrix(n));
        // h_1(x) = x g(x) + n/2 - x, with g the two-part quadratic
        IntPolynomial g = IntPolynomial::from_ll(
            {-(static_cast<long long>(n) * n / 4 - 1), -1, 1});
        IntPolynomial identity =
            IntPolynomial::from_ll({0, 1}) * g +
            IntPolynomial::from_ll({n / 2, -1});
        bool same = h1 == identity;
        int cmp = compare_largest_roots(h1, g);
        os << "n=" << n << (same ? " identity-ok" : " identity-MISMATCH")
           << (cmp > 0 ? " center-wins" : " CENTER-DOES-NOT-WIN") << "; ";
        ok = ok && same && cmp > 0;
    }
    // cross-check on the actual order-10 graphs, exactly
    Graph center = join(disjoint_union(Graph(1), matching(4)), Graph(5));
    Graph side = join(matching(4), Graph(6));
    ok = ok && rho_compare_exact(center, side) == Ordering::greater;
    os << "graph-level order-10 comparison "
       << (rho_compare_exact(center, side) == Ordering::greater ? "confirms" : "FAILS");
    detail = os.str();
    return ok;
}

// ---- criterion 8: walk-lemma fixed point -------------------------------

bool crit_walk_lemma(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (int n : {15, 17}) {
        WalkLemmaReport r = verify_walk_lemma(3, n);
        os << "n=" << n << " family=" << r.family_size << " survivors=" << r.survivor_count
           << "/" << r.expected_count << " stable_after=" << r.stable_after_level
           << (r.survivors_equal_v_family ? " ok; " : " MISMATCH; ");
        ok = ok && r.survivors_equal_v_family;
    }
    detail = os.str();
    return ok;
}

// ---- criterion 9: property suites --------------------------------------

bool crit_properties(std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    // fan detector equals the naive oracle exhaustively at n <= 6
    {
        bool agree = true;
        Graph h4 = fan(4);
        for (unsigned m = 0; m < (1u << 15); ++m) {
            Graph g(6);
            int bit = 0;
            for (int u = 0; u < 6; ++u)
                for (int v = u + 1; v < 6; ++v, ++bit)
                    if ((m >> bit) & 1u) g.add_edge(u, v);
            if (has_fan(g, 4) != naive_subgraph_oracle(h4, g)) { agree = false; break; }
        }
        os << "fan-oracle=" << (agree ? "ok" : "MISMATCH") << " ";
        ok = ok && agree;
    }

    // subgraph spectral monotonicity on 300 random pairs
    {
        Rng rng(97);
        bool mono = true;
        int done = 0;
        while (done < 300) {
            int n = 3 + static_cast<int>(rng.below(8));
            Graph g = random_graph(rng, n, 30 + rng.below(50));
            if (!g.is_connected() || g.edge_count() < 2) continue;
            Graph h = g;
            int drop = static_cast<int>(rng.below(static_cast<uint64_t>(g.edge_count())));
            int seen = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (h.adjacent(u, v) && seen++ == drop) h.remove_edge(u, v);
            if (spectral_radius(h).rho > spectral_radius(g).rho + 1e-10) mono = false;
            ++done;
        }
        os << "monotonicity=" << (mono ? "ok" : "VIOLATED") << " ";
        ok = ok && mono;
    }

    // split identity on every graph with at most 8 vertices, levels to 8
    {
        bool split_ok = true;
        for (int n = 1; n <= 8 && split_ok; ++n) {
            for (const Graph& g : enumerate_graphs(n)) {
                WalkProfile p = walk_profile(g, 8);
                for (int l = 2; l <= 8 && split_ok; ++l)
                    for (int i = 1; i < l; ++i) {
                        BigInt sum;
                        for (int u = 0; u < n; ++u) sum += p.at(i, u) * p.at(l - i, u);
                        if (!(sum == p.total(l))) { split_ok = false; break; }
                    }
                if (!split_ok) break;
            }
        }
        os << "split-identity=" << (split_ok ? "ok" : "VIOLATED") << " ";
        ok = ok && split_ok;
    }

    // degree-square maximizers for m <= 5 edges on n <= 7 vertices
    {
        bool degsq = true;
        for (int n = 3; n <= 7; ++n) {
            int pairs = n * (n - 1) / 2;
            std::vector<long long> best(6, -1);
            std::vector<std::set<std::string>> arg(6);
            for (long long mask = 0; mask < (1ll << pairs); ++mask) {
                int m = std::popcount(static_cast<unsigned long long>(mask));
                if (m < 1 || m > 5) continue;
                Graph g(n);
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++bit)
                        if ((mask >> bit) & 1ll) g.add_edge(u, v);
                long long s = 0;
                for (int v = 0; v < n; ++v) s += static_cast<long long>(g.degree(v)) * g.degree(v);
                if (s > best[m]) { best[m] = s; arg[m].clear(); }
                if (s == best[m]) arg[m].insert(canonical_form(g).bytes);
            }
            for (int m = 1; m <= 5 && degsq; ++m) {
                if (n < m + 2) continue;
                std::set<std::string> expected;
                expected.insert(canonical_form(disjoint_union(star(m + 1), Graph(n - m - 1))).bytes);
                if (m == 3)
                    expected.insert(canonical_form(disjoint_union(complete(3), Graph(n - 3))).bytes);
                if (arg[m] != expected) degsq = false;
            }
        }
        os << "degree-square=" << (degsq ? "ok" : "MISMATCH");
        ok = ok && degsq;
    }

    detail = os.str();
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "walk gap of the order-15 pair", crit_walk_gap},
        {2, "closed-form walk totals", crit_closed_forms},
        {3, "quotient agreement on 20+ joins", crit_quotient_agreement},
        {4, "lower-bound rows", crit_lower_bounds},
        {5, "brute-force extremal structure", crit_spex},
        {6, "embedded-member comparison bound", crit_spec_compare},
        {7, "exact root fight at k=1", crit_root_fight},
        {8, "walk-lemma fixed point", crit_walk_lemma},
        {9, "property suites", crit_properties},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%s) [%.1fs] %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs, detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
