#pragma once

#include "spexlab/intpoly.hpp"

namespace spexlab {

// num / 2^exp2
struct Dyadic {
    BigInt num;
    unsigned exp2 = 0;

    static int cmp(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }

    static Dyadic midpoint(const Dyadic& a, const Dyadic& b);
    double to_double() const;
    // decimal expansion, rounded to `digits` fractional digits
    std::string to_decimal(int digits) const;
};

// Sturm-chain root counting for a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& squarefree);
    int variations_at(const Dyadic& x) const;   // sign changes, zeros skipped
    // number of distinct roots in (a, b]; valid at any endpoints
    int count_roots(const Dyadic& a, const Dyadic& b) const;
    const IntPolynomial& poly() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

// Isolating interval (lo, hi] for one real root; exact when the root is the
// dyadic value hi itself.
struct RootInterval {
    Dyadic lo, hi;
    bool exact = false;

    double midpoint_double() const;
    std::string decimal(int digits) const;
    double width_upper_bound() const;
};

// Largest real root of p, isolated to width <= 2^-prec_bits.
// Throws std::runtime_error when p has no real root, std::invalid_argument
// when p is constant.
RootInterval largest_real_root(const IntPolynomial& p, unsigned prec_bits = 60);

// -1 / 0 / +1 comparison of the largest real roots of two polynomials,
// decided exactly (equality via gcd witness inside isolating intervals).
int compare_largest_roots(const IntPolynomial& p1, const IntPolynomial& p2);

} // namespace spexlab
