#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>
#include <compare>

namespace spexlab {

// Arbitrary-precision signed integer, sign + magnitude with 32-bit limbs
// (little-endian). Big enough for walk counts (~k^L) and characteristic
// polynomial coefficients; no attempt at asymptotically fast multiplication.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Division that must be exact; throws std::logic_error on a remainder.
    BigInt div_exact(const BigInt& b) const;

    BigInt& operator<<=(unsigned bits);
    friend BigInt operator<<(BigInt a, unsigned bits) { return a <<= bits; }

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = cmp(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned e);

    // Number of bits in |x|; 0 for zero.
    size_t bit_length() const;

    // Exact when the value fits; throws otherwise.
    long long to_ll() const;
    bool fits_ll() const;
    double to_double() const;

    std::string to_string() const;

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<uint32_t> mag_;     // no leading zero limbs; empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace spexlab
