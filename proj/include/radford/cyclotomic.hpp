#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "radford/errors.hpp"

namespace radford {

using Rational = mpq_class;

namespace detail {

using Poly = std::vector<Rational>;  // coeffs[k] is the coefficient of x^k

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
inline Poly poly_mod(Poly a, const Poly& m) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Rational lead = a.back() / m.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        poly_trim(a);
    }
    return a;
}

// Quotient of an exact division a / b.
inline Poly poly_divexact(Poly a, const Poly& b) {
    poly_trim(a);
    if (a.empty()) return {};
    Poly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        const Rational lead = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        poly_trim(a);
        if (a.empty()) break;
    }
    return q;
}

}  // namespace detail

// Per-order data for Q(zeta_N) = Q[x]/(Phi_N): the cyclotomic polynomial and a
// reduction table for x^k, k < 2 deg(Phi_N) - 1.
class CycField {
public:
    explicit CycField(int order) : order_(order) {
        phi_ = cyclotomic_poly(order);
        deg_ = static_cast<int>(phi_.size()) - 1;
        xpow_.resize(2 * deg_ - 1 > 0 ? 2 * deg_ - 1 : 1);
        for (int k = 0; k < static_cast<int>(xpow_.size()); ++k) {
            detail::Poly xk(k + 1, Rational(0));
            xk[k] = 1;
            detail::Poly red = detail::poly_mod(xk, phi_);
            red.resize(deg_, Rational(0));
            xpow_[k] = std::move(red);
        }
    }

    int order() const { return order_; }
    int degree() const { return deg_; }
    const detail::Poly& phi() const { return phi_; }
    const detail::Poly& xpow(int k) const { return xpow_[k]; }

    static const CycField& get(int order) {
        if (order < 1) throw PreconditionError("cyclotomic order must be >= 1");
        static std::mutex mtx;
        static std::map<int, std::unique_ptr<CycField>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(order);
        if (it == cache.end())
            it = cache.emplace(order, std::make_unique<CycField>(order)).first;
        return *it->second;
    }

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
    static detail::Poly cyclotomic_poly(int n) {
        detail::Poly num(n + 1, Rational(0));
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = detail::poly_divexact(num, cyclotomic_poly(d));
        }
        return num;
    }

private:
    int order_;
    int deg_;
    detail::Poly phi_;
    std::vector<detail::Poly> xpow_;
};

// An element of Q(zeta_N), stored in the canonical reduced form: a polynomial
// in zeta_N of degree < deg Phi_N. Structural equality of the coefficients is
// field equality. All arithmetic is exact.
class Cyc {
public:
    Cyc() : order_(1), c_(1, Rational(0)) {}

    static Cyc zero(int order) { return Cyc(order); }

    static Cyc one(int order) {
        Cyc r(order);
        r.c_[0] = 1;
        return r;
    }

    static Cyc rational(const Rational& q, int order = 1) {
        Cyc r(order);
        r.c_[0] = q;
        return r;
    }

    static Cyc integer(long v, int order = 1) { return rational(Rational(v), order); }

    // zeta_N^k; depends only on k mod N.
    static Cyc root(int order, long k) {
        const CycField& f = CycField::get(order);
        long e = k % order;
        if (e < 0) e += order;
        detail::Poly xe(static_cast<std::size_t>(e) + 1, Rational(0));
        xe[static_cast<std::size_t>(e)] = 1;
        detail::Poly red = detail::poly_mod(xe, f.phi());
        red.resize(f.degree(), Rational(0));
        Cyc r(order);
        r.c_ = std::move(red);
        return r;
    }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    bool is_one() const { return is_rational() && c_[0] == 1; }

    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    // Valid only when is_rational().
    const Rational& rational_value() const { return c_[0]; }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
        return x;
    }

    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
        return x;
    }

    Cyc operator-() const {
        Cyc r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        const CycField& f = CycField::get(x.order_);
        const int deg = f.degree();
        std::vector<Rational> conv(2 * deg - 1 > 0 ? 2 * deg - 1 : 1, Rational(0));
        for (int i = 0; i < deg; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < deg; ++j)
                if (y.c_[j] != 0) conv[i + j] += x.c_[i] * y.c_[j];
        }
        Cyc r(x.order_);
        for (int k = 0; k < static_cast<int>(conv.size()); ++k) {
            if (conv[k] == 0) continue;
            const detail::Poly& red = f.xpow(k);
            for (int t = 0; t < deg; ++t)
                if (red[t] != 0) r.c_[t] += conv[k] * red[t];
        }
        return r;
    }

    Cyc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
        const CycField& f = CycField::get(order_);
        // Extended Euclid: a*this + b*Phi = 1 in Q[x].
        detail::Poly r0 = f.phi(), r1 = c_;
        detail::poly_trim(r1);
        detail::Poly s0 = {}, s1 = {Rational(1)};
        while (true) {
            detail::poly_trim(r1);
            if (r1.empty()) throw DivisionByZero("element not invertible");  // cannot happen: Phi irreducible
            if (r1.size() == 1) break;
            // r0 = q*r1 + r2
            detail::Poly q = poly_quot(r0, r1);
            detail::Poly r2 = poly_sub(r0, detail::poly_mul(q, r1));
            detail::Poly s2 = poly_sub(s0, detail::poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        const Rational c = r1[0];
        Cyc out(order_);
        detail::Poly s = detail::poly_mod(s1, f.phi());
        s.resize(f.degree(), Rational(0));
        for (int k = 0; k < f.degree(); ++k) out.c_[k] = s[k] / c;
        return out;
    }

    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (a.order_ == b.order_) return a.c_ == b.c_;
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    Cyc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyc acc = Cyc::one(order_);
        Cyc base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Embed into Q(zeta_M), for order | M, via zeta_order -> zeta_M^{M/order}.
    Cyc embedded(int target_order) const {
        if (target_order == order_) return *this;
        if (target_order % order_ != 0)
            throw PreconditionError("no embedding: order does not divide target");
        const long step = target_order / order_;
        Cyc out = Cyc::zero(target_order);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Cyc t = Cyc::root(target_order, step * static_cast<long>(k));
            for (auto& q : t.c_) q *= c_[k];
            out += t;
        }
        return out;
    }

    // Multiplicative order, or 0 if this is not a root of unity.
    long mult_order() const {
        if (is_zero()) return 0;
        Cyc acc = *this;
        for (long k = 1; k <= 2 * order_; ++k) {
            if (acc.is_one()) return k;
            acc = acc * *this;
        }
        return 0;
    }

    // Exact rendering as a polynomial in the root of unity, e.g. "1/2 + 3*z6^2".
    std::string str(const char* root_name = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rational q = c_[k];
            if (first) {
                if (q < 0) { os << "-"; q = -q; }
            } else {
                os << (q < 0 ? " - " : " + ");
                if (q < 0) q = -q;
            }
            first = false;
            if (k == 0) {
                os << q.get_str();
            } else {
                if (q != 1) os << q.get_str() << "*";
                os << root_name << order_;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

    std::complex<double> to_complex() const;

private:
    explicit Cyc(int order)
        : order_(order), c_(static_cast<std::size_t>(CycField::get(order).degree()), Rational(0)) {}

    static std::pair<Cyc, Cyc> align(const Cyc& a, const Cyc& b) {
        if (a.order_ == b.order_) return {a, b};
        const int l = std::lcm(a.order_, b.order_);
        return {a.embedded(l), b.embedded(l)};
    }

    static detail::Poly poly_quot(const detail::Poly& a, const detail::Poly& b) {
        detail::Poly r = a;
        return detail::poly_divexact(std::move(r), b);
    }

    static detail::Poly poly_sub(const detail::Poly& a, const detail::Poly& b) {
        detail::Poly r = a;
        if (r.size() < b.size()) r.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        detail::poly_trim(r);
        return r;
    }

    int order_;
    std::vector<Rational> c_;
};

inline std::complex<double> Cyc::to_complex() const {
    // Float rendering for human scanning only; never used in computations.
    const double pi = 3.14159265358979323846;
    std::complex<double> z = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const double arg = 2.0 * pi * static_cast<double>(k) / order_;
        z += c_[k].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

}  // namespace radford
