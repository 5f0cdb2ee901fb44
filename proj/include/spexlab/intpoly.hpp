#pragma once

#include "spexlab/bigint.hpp"

#include <vector>
#include <string>

namespace spexlab {

// Univariate polynomial with exact integer coefficients, ascending degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial from_ll(const std::vector<long long>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial scaled(const BigInt& c) const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    IntPolynomial derivative() const;
    BigInt eval(const BigInt& x) const;

    // Sign of p(num / 2^exp2), evaluated exactly.
    int sign_at_dyadic(const BigInt& num, unsigned exp2) const;

    BigInt content() const;              // nonnegative gcd of coefficients
    IntPolynomial primitive_part() const;  // sign of leading coeff preserved

    // Exact polynomial division; throws std::logic_error when not divisible.
    static IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& d);

    // Pseudo-remainder scaled by |lc(b)|^(deg a - deg b + 1); sign-faithful.
    static IntPolynomial pseudo_rem_abs(const IntPolynomial& a, const IntPolynomial& b);

    // Primitive gcd with positive leading coefficient.
    static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

    // p / gcd(p, p'), normalized to positive leading coefficient.
    IntPolynomial squarefree_part() const;

    std::string to_string() const;       // human-readable, for reports

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

// det(xI - M) by the Faddeev-LeVerrier recurrence, exact. dim <= 16.
IntPolynomial char_poly_exact(const std::vector<std::vector<BigInt>>& m);
IntPolynomial char_poly_exact_ll(const std::vector<std::vector<long long>>& m);

} // namespace spexlab
