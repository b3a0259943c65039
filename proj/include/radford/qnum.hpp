#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "radford/cyclotomic.hpp"
#include "radford/errors.hpp"

namespace radford {

// (n)_q = 1 + q + ... + q^{n-1}
inline Cyc qnum(int n, const Cyc& q) {
    Cyc s = Cyc::zero(q.order());
    Cyc p = Cyc::one(q.order());
    for (int i = 0; i < n; ++i) {
        s += p;
        p = p * q;
    }
    return s;
}

// (n)_q! = (1)_q (2)_q ... (n)_q
inline Cyc qfact(int n, const Cyc& q) {
    Cyc f = Cyc::one(q.order());
    for (int s = 1; s <= n; ++s) f = f * qnum(s, q);
    return f;
}

// Gaussian binomial, by the Pascal recursion
//   binom(n,k)_q = binom(n-1,k-1)_q + q^k binom(n-1,k)_q,
// which stays defined when intermediate q-factorials vanish at roots of unity.
inline Cyc qbinom(int n, int k, const Cyc& q) {
    if (k < 0 || k > n) throw PreconditionError("qbinom requires 0 <= k <= n");
    std::vector<Cyc> row(static_cast<std::size_t>(n) + 1, Cyc::zero(q.order()));
    row[0] = Cyc::one(q.order());
    std::vector<Cyc> qpow(static_cast<std::size_t>(n) + 1, Cyc::one(q.order()));
    for (int j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * q;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
    return row[k];
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

// Graded dimensions as a polynomial with nonnegative integer coefficients;
// coeffs[d] is the dimension in degree d.
struct HilbertPoly {
    std::vector<long long> coeffs;

    long long total() const {
        long long t = 0;
        for (long long c : coeffs) t += c;
        return t;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    friend bool operator==(const HilbertPoly& a, const HilbertPoly& b) = default;
};

// Product of factors (n_i)_{t^{d_i}}, with (n)_t = t^{n-1} + ... + t + 1.
inline HilbertPoly hilbert_expand(const std::vector<std::pair<int, int>>& factors) {
    std::vector<long long> acc = {1};
    for (auto [n, d] : factors) {
        if (n < 1 || d < 1) throw PreconditionError("hilbert_expand requires n,d >= 1");
        std::vector<long long> f(static_cast<std::size_t>(d) * (n - 1) + 1, 0);
        for (int s = 0; s < n; ++s) f[static_cast<std::size_t>(s) * d] = 1;
        std::vector<long long> next(acc.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
        acc = std::move(next);
    }
    HilbertPoly h{std::move(acc)};
    h.trim();
    return h;
}

}  // namespace radford
