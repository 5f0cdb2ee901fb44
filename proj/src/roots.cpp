#include "spexlab/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace spexlab {

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp2, b.exp2);
    BigInt an = a.num << (e - a.exp2);
    BigInt bn = b.num << (e - b.exp2);
    return BigInt::cmp(an, bn);
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp2, b.exp2);
    BigInt an = a.num << (e - a.exp2);
    BigInt bn = b.num << (e - b.exp2);
    return Dyadic{an + bn, e + 1};
}

double Dyadic::to_double() const {
    return std::ldexp(num.to_double(), -static_cast<int>(exp2));
}

std::string Dyadic::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    BigInt scaled = num * BigInt::pow(BigInt(10), static_cast<unsigned>(digits));
    bool neg = scaled.is_negative();
    if (neg) scaled = -scaled;
    // round half up on |value|
    if (exp2 > 0) scaled += BigInt(1) << (exp2 - 1);
    BigInt q, r;
    BigInt::divmod(scaled, BigInt(1) << exp2, q, r);
    std::string s = q.to_string();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
        out = s.substr(0, s.size() - static_cast<size_t>(digits)) + "." +
              s.substr(s.size() - static_cast<size_t>(digits));
    }
    if (neg && out.find_first_not_of("0.") != std::string::npos) out.insert(out.begin(), '-');
    return out;
}

SturmChain::SturmChain(const IntPolynomial& squarefree) {
    if (squarefree.is_zero())
        throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(squarefree);
    if (squarefree.degree() == 0) return;
    chain_.push_back(squarefree.derivative());
    while (chain_.back().degree() > 0) {
        IntPolynomial r = IntPolynomial::pseudo_rem_abs(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;  // squarefree input should not get here
        chain_.push_back((-r).primitive_part());
    }
}

int SturmChain::variations_at(const Dyadic& x) const {
    int count = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at_dyadic(x.num, x.exp2);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const Dyadic& a, const Dyadic& b) const {
    return variations_at(a) - variations_at(b);
}

double RootInterval::midpoint_double() const {
    if (exact) return hi.to_double();
    return 0.5 * (lo.to_double() + hi.to_double());
}

std::string RootInterval::decimal(int digits) const {
    if (exact) return hi.to_decimal(digits);
    return Dyadic::midpoint(lo, hi).to_decimal(digits);
}

double RootInterval::width_upper_bound() const {
    if (exact) return 0.0;
    return hi.to_double() - lo.to_double();
}

namespace {

// integer Cauchy bound: all real roots lie strictly inside (-U, U)
BigInt cauchy_bound(const IntPolynomial& p) {
    BigInt maxc;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = p.coeff(i).abs();
        if (maxc < a) maxc = a;
    }
    BigInt lead = p.leading().abs();
    return BigInt(2) + maxc / lead;
}

struct Isolation {
    SturmChain chain;
    Dyadic lo, hi;   // largest root in (lo, hi]
    bool exact = false;
    int count = -1;  // roots of the polynomial in (lo, hi], -1 unknown

    explicit Isolation(const IntPolynomial& sf) : chain(sf) {
        BigInt u = cauchy_bound(sf);
        lo = Dyadic{-u, 0};
        hi = Dyadic{u, 0};
        count = chain.count_roots(lo, hi);
        if (count <= 0) throw std::runtime_error("largest_real_root: no real root");
    }

    // one bisection step; keeps the largest root inside (lo, hi]
    void step() {
        if (exact) return;
        Dyadic mid = Dyadic::midpoint(lo, hi);
        int high_side = chain.count_roots(mid, hi);
        if (high_side >= 1) {
            lo = mid;
            count = high_side;
        } else {
            if (chain.poly().sign_at_dyadic(mid.num, mid.exp2) == 0) {
                // mid is a root and nothing lies above it: the largest root
                hi = mid;
                lo = mid;
                exact = true;
                count = 1;
                return;
            }
            hi = mid;
            count = chain.count_roots(lo, hi);
        }
    }

    void refine_until_isolated() {
        while (!exact && count != 1) step();
    }

    bool width_at_most(unsigned prec_bits) const {
        if (exact) return true;
        // hi - lo <= 2^-prec  <=>  (hi-lo) * 2^prec <= 1
        unsigned e = std::max(lo.exp2, hi.exp2);
        BigInt diff = (hi.num << (e - hi.exp2)) - (lo.num << (e - lo.exp2));
        diff <<= prec_bits;
        return diff <= (BigInt(1) << e);
    }
};

} // namespace

RootInterval largest_real_root(const IntPolynomial& p, unsigned prec_bits) {
    if (p.is_zero() || p.degree() == 0)
        throw std::invalid_argument("largest_real_root: polynomial must be nonconstant");
    Isolation iso(p.squarefree_part());
    while (!iso.width_at_most(prec_bits)) iso.step();
    return RootInterval{iso.lo, iso.hi, iso.exact};
}

int compare_largest_roots(const IntPolynomial& p1, const IntPolynomial& p2) {
    if (p1.is_zero() || p1.degree() == 0 || p2.is_zero() || p2.degree() == 0)
        throw std::invalid_argument("compare_largest_roots: polynomials must be nonconstant");
    IntPolynomial sf1 = p1.squarefree_part();
    IntPolynomial sf2 = p2.squarefree_part();
    Isolation a(sf1), b(sf2);
    a.refine_until_isolated();
    b.refine_until_isolated();
    IntPolynomial g;  // computed lazily
    bool have_gcd = false;
    for (int round = 0; round < 4096; ++round) {
        if (a.exact && b.exact) return Dyadic::cmp(a.hi, b.hi);
        if (a.exact) {
            // a's root is exactly the point a.hi
            if (Dyadic::cmp(a.hi, b.lo) <= 0) return -1;   // root_b > b.lo >= root_a
            if (Dyadic::cmp(b.hi, a.hi) < 0) return 1;     // root_b <= b.hi < root_a
            if (sf2.sign_at_dyadic(a.hi.num, a.hi.exp2) == 0) return 0;
            b.step();
            continue;
        }
        if (b.exact) {
            if (Dyadic::cmp(b.hi, a.lo) <= 0) return 1;
            if (Dyadic::cmp(a.hi, b.hi) < 0) return -1;
            if (sf1.sign_at_dyadic(b.hi.num, b.hi.exp2) == 0) return 0;
            a.step();
            continue;
        }
        if (Dyadic::cmp(a.hi, b.lo) <= 0) return -1;
        if (Dyadic::cmp(b.hi, a.lo) <= 0) return 1;
        if (!have_gcd) {
            g = IntPolynomial::gcd(sf1, sf2);
            have_gcd = true;
        }
        if (g.degree() >= 1) {
            Dyadic lo = Dyadic::cmp(a.lo, b.lo) >= 0 ? a.lo : b.lo;
            Dyadic hi = Dyadic::cmp(a.hi, b.hi) <= 0 ? a.hi : b.hi;
            if (Dyadic::cmp(lo, hi) < 0) {
                SturmChain gc(g.squarefree_part());
                if (gc.count_roots(lo, hi) >= 1) return 0;
            }
        }
        a.step();
        b.step();
    }
    throw std::logic_error("compare_largest_roots: failed to separate roots");
}

} // namespace spexlab
