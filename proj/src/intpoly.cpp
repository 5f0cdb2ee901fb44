#include "spexlab/intpoly.hpp"

#include <stdexcept>

namespace spexlab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::from_ll(const std::vector<long long>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("IntPolynomial::leading on zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> c = coeffs_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scaled(const BigInt& s) const {
    std::vector<BigInt> c = coeffs_;
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * BigInt(static_cast<long long>(i));
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

int IntPolynomial::sign_at_dyadic(const BigInt& num, unsigned exp2) const {
    // sign of sum c_i num^i 2^(exp2 (d-i)) == sign of p(num / 2^exp2)
    if (is_zero()) return 0;
    int d = degree();
    BigInt acc = coeffs_.back();
    for (int i = d - 1; i >= 0; --i) {
        acc = acc * num;
        acc += coeffs_[static_cast<size_t>(i)] << (exp2 * static_cast<unsigned>(d - i));
    }
    return acc.sign();
}

BigInt IntPolynomial::content() const {
    BigInt g;
    for (const auto& c : coeffs_) g = BigInt::gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    std::vector<BigInt> c = coeffs_;
    for (auto& v : c) v = v.div_exact(g);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.is_zero()) throw std::domain_error("IntPolynomial: division by zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree())
        throw std::logic_error("IntPolynomial::divide_exact: not divisible");
    std::vector<BigInt> rem = p.coeffs_;
    std::vector<BigInt> quot(static_cast<size_t>(p.degree() - d.degree()) + 1);
    for (int i = p.degree() - d.degree(); i >= 0; --i) {
        BigInt c = rem[static_cast<size_t>(i + d.degree())].div_exact(d.leading());
        quot[static_cast<size_t>(i)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(i + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw std::logic_error("IntPolynomial::divide_exact: remainder");
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pseudo_rem_abs(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem_abs: zero divisor");
    BigInt l = b.leading().abs();
    IntPolynomial r = a;
    int delta = a.degree() - b.degree();
    for (int k = delta; k >= 0; --k) {
        if (r.degree() == b.degree() + k) {
            // c * lc(b) must equal lc(r) * |lc(b)| for the terms to cancel
            BigInt c = r.leading();
            if (b.leading().is_negative()) c = -c;
            // r <- l*r - c * b * x^k
            IntPolynomial shifted;
            {
                std::vector<BigInt> sc(static_cast<size_t>(b.degree() + k) + 1);
                for (int j = 0; j <= b.degree(); ++j)
                    sc[static_cast<size_t>(j + k)] = b.coeffs_[static_cast<size_t>(j)] * c;
                shifted = IntPolynomial(std::move(sc));
            }
            r = r.scaled(l) - shifted;
        } else {
            r = r.scaled(l);
        }
    }
    return r;
}

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.is_zero() ? IntPolynomial{} : a.primitive_part();
    IntPolynomial y = b.is_zero() ? IntPolynomial{} : b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_rem_abs(x, y);
        x = std::move(y);
        y = r.is_zero() ? IntPolynomial{} : r.primitive_part();
    }
    if (x.is_zero()) return {};
    if (x.leading().is_negative()) x = -x;
    return x;
}

IntPolynomial IntPolynomial::squarefree_part() const {
    if (is_zero()) return {};
    if (degree() == 0) return IntPolynomial({BigInt(1)});
    IntPolynomial g = gcd(*this, derivative());
    IntPolynomial sf;
    if (g.degree() == 0) {
        sf = primitive_part();
    } else {
        sf = divide_exact(primitive_part().scaled(g.leading()), g).primitive_part();
    }
    if (sf.leading().is_negative()) sf = -sf;
    return sf;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) out += "-";
        BigInt a = c.abs();
        std::string mag = a.to_string();
        if (i == 0) { out += mag; continue; }
        if (mag != "1") out += mag + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

IntPolynomial char_poly_exact(const std::vector<std::vector<BigInt>>& m) {
    size_t n = m.size();
    if (n == 0) return IntPolynomial({BigInt(1)});
    if (n > 16) throw std::invalid_argument("char_poly_exact: dimension exceeds 16");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly_exact: not square");

    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = BigInt(1);
    std::vector<std::vector<BigInt>> work = m;  // M_1 = A
    auto trace = [&](const std::vector<std::vector<BigInt>>& x) {
        BigInt t;
        for (size_t i = 0; i < n; ++i) t += x[i][i];
        return t;
    };
    BigInt c = -trace(work);
    coeffs[n - 1] = c;
    for (size_t k = 2; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        std::vector<std::vector<BigInt>> shifted = work;
        for (size_t i = 0; i < n; ++i) shifted[i][i] += c;
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (m[i][l].is_zero()) continue;
                for (size_t j = 0; j < n; ++j)
                    next[i][j] += m[i][l] * shifted[l][j];
            }
        work = std::move(next);
        c = (-trace(work)).div_exact(BigInt(static_cast<long long>(k)));
        coeffs[n - k] = c;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_exact_ll(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<BigInt>> b(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        b[i].reserve(m[i].size());
        for (long long v : m[i]) b[i].emplace_back(v);
    }
    return char_poly_exact(b);
}

} // namespace spexlab
