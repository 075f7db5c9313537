// Exact arithmetic in Q(zeta_m): polynomials with rational coefficients
// reduced modulo the m-th cyclotomic polynomial. Used for the character sums
// of the orbifold Riemann-Roch correction, which must come out as exact
// rationals despite irrational intermediates.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "orbik3/rational.hpp"

namespace orbik3 {

using Poly = std::vector<Rational>; // c0 + c1 x + c2 x^2 + ...

namespace polydetail {

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

inline Poly scale(const Poly& a, const Rational& s) {
    Poly out = a;
    for (auto& c : out) c *= s;
    trim(out);
    return out;
}

// Returns {quotient, remainder}; divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    if (den.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly quot;
    trim(num);
    int dd = degree(den);
    if (degree(num) >= dd) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (degree(num) >= dd) {
        int shift = degree(num) - dd;
        Rational factor = num.back() / den.back();
        quot[shift] = factor;
        for (int i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
        trim(num);
    }
    return {quot, num};
}

} // namespace polydetail

// Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
inline Poly cyclotomic_polynomial(long m, std::map<long, Poly>* memo = nullptr) {
    std::map<long, Poly> local;
    if (!memo) memo = &local;
    auto it = memo->find(m);
    if (it != memo->end()) return it->second;
    Poly num(static_cast<size_t>(m) + 1, Rational(0));
    num[0] = -1;
    num.back() = 1; // x^m - 1
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = polydetail::divmod(num, cyclotomic_polynomial(d, memo));
        if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
        num = q;
    }
    (*memo)[m] = num;
    return num;
}

class CyclotomicField {
public:
    explicit CyclotomicField(long m) : m_(m), phi_(cyclotomic_polynomial(m)) {
        if (m < 2) throw std::invalid_argument("need m >= 2");
    }

    long order() const { return m_; }

    Poly reduce(const Poly& p) const { return polydetail::divmod(p, phi_).second; }

    Poly mul(const Poly& a, const Poly& b) const { return reduce(polydetail::mul(a, b)); }

    Poly add(const Poly& a, const Poly& b) const { return polydetail::add(a, b); }

    // zeta^k as a reduced field element.
    Poly root_power(long k) const {
        k %= m_;
        if (k < 0) k += m_;
        Poly p(static_cast<size_t>(k) + 1, Rational(0));
        p.back() = 1;
        return reduce(p);
    }

    // 1 - zeta^k
    Poly one_minus_root(long k) const {
        Poly one{Rational(1)};
        return polydetail::add(one, polydetail::scale(root_power(k), Rational(-1)));
    }

    // Inverse via extended Euclid against Phi_m; element must be nonzero.
    Poly inverse(const Poly& a0) const {
        Poly r0 = phi_, r1 = reduce(a0);
        if (r1.empty()) throw std::invalid_argument("inverse of zero");
        Poly s0 = {}, s1 = {Rational(1)}; // coefficients of a0 in the Bezout identity
        while (!r1.empty()) {
            auto [q, r2] = polydetail::divmod(r0, r1);
            Poly s2 = polydetail::add(s0, polydetail::scale(polydetail::mul(q, s1), Rational(-1)));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (polydetail::degree(r0) != 0) throw std::logic_error("element not invertible mod Phi_m");
        return reduce(polydetail::scale(s0, Rational(1) / r0[0]));
    }

    // Demands a constant (rational) element; anything else is a logic error.
    Rational rational_part(const Poly& p) const {
        Poly r = reduce(p);
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i] != 0) throw std::logic_error("expected a rational value");
        return r.empty() ? Rational(0) : r[0];
    }

private:
    long m_;
    Poly phi_;
};

} // namespace orbik3
