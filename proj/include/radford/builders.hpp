#pragma once

#include "radford/hopf.hpp"

namespace radford {

// Shared parameters: xi is a fixed primitive nm-th root of unity and
// omega = xi^m is the primitive n-th root entering all relations.
struct Params {
    int n, m, N;  // N = n*m, the ambient cyclotomic order

    Params(int n_, int m_) : n(n_), m(m_), N(n_ * m_) {
        if (n < 2 || m < 1) throw PreconditionError("need n >= 2, m >= 1");
    }

    Cyc xi(long e = 1) const { return Cyc::root(N, e); }
    Cyc omega(long e = 1) const { return Cyc::root(N, static_cast<long>(m) * e); }
    Cyc one() const { return Cyc::one(N); }
    Cyc zero() const { return Cyc::zero(N); }

    int mod(long v, int q) const {
        long r = v % q;
        if (r < 0) r += q;
        return static_cast<int>(r);
    }
    int modN(long v) const { return mod(v, N); }
};

namespace detail {

// Monomial algebras on basis e1^a e2^b with a < cap1, b < cap2 (b cyclic).
inline int mono_index(int a, int b, int cap2) { return a * cap2 + b; }

// Assemble an FDHopf once mult is filled: comultiplication extended
// multiplicatively from generator values, counit from generator values,
// antipode solved from the axiom.
inline void finish_hopf(FDHopf& h, int cap1, int cap2, const SVec& d_gen1, const SVec& d_gen2,
                        const Cyc& eps_gen1, const Cyc& eps_gen2) {
    h.unit = sv::unit(mono_index(0, 0, cap2));
    h.comult.resize(static_cast<std::size_t>(h.dim));
    // Delta(e1^a e2^b) = Delta(e1)^a Delta(e2)^b, computed in the tensor square.
    std::vector<SVec> d1pow(static_cast<std::size_t>(cap1));
    d1pow[0] = sv::unit(mono_index(0, 0, cap2) * h.dim + mono_index(0, 0, cap2));
    for (int a = 1; a < cap1; ++a) d1pow[a] = h.mul2(d1pow[a - 1], d_gen1);
    for (int a = 0; a < cap1; ++a) {
        SVec acc = d1pow[static_cast<std::size_t>(a)];
        for (int b = 0; b < cap2; ++b) {
            h.comult[static_cast<std::size_t>(mono_index(a, b, cap2))] = acc;
            if (b + 1 < cap2) acc = h.mul2(acc, d_gen2);
        }
    }
    h.counit.assign(static_cast<std::size_t>(h.dim), Cyc::zero(h.field_order));
    for (int a = 0; a < cap1; ++a)
        for (int b = 0; b < cap2; ++b)
            h.counit[static_cast<std::size_t>(mono_index(a, b, cap2))] =
                eps_gen1.pow(a) * eps_gen2.pow(b);
    h.antipode = solve_antipode(h);
}

}  // namespace detail

// Radford algebra R_{n,m}: basis { x^j g^i : 0 <= j < n, 0 <= i < nm } with
// gx = omega xg, x^n = 1 - g^n, g^{nm} = 1; x is (1,g)-primitive.
inline FDHopf build_radford(int n, int m) {
    const Params P(n, m);
    FDHopf h;
    h.name = "R(" + std::to_string(n) + "," + std::to_string(m) + ")";
    h.dim = n * n * m;
    h.field_order = P.N;
    h.labels.resize(static_cast<std::size_t>(h.dim));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < P.N; ++i)
            h.labels[static_cast<std::size_t>(detail::mono_index(j, i, P.N))] = {j, i};
    h.mult.resize(static_cast<std::size_t>(h.dim) * h.dim);
    for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < P.N; ++i1)
            for (int j2 = 0; j2 < n; ++j2)
                for (int i2 = 0; i2 < P.N; ++i2) {
                    // (x^{j1} g^{i1})(x^{j2} g^{i2}) = w^{i1 j2} x^{j1+j2} g^{i1+i2}
                    const Cyc c = P.omega(static_cast<long>(i1) * j2);
                    const int J = j1 + j2, I = P.modN(i1 + i2);
                    SVec out;
                    if (J < n) {
                        out = sv::unit(detail::mono_index(J, I, P.N), c);
                    } else {  // x^J = x^{J-n} (1 - g^n), and g^n is central
                        out = sv::add(sv::unit(detail::mono_index(J - n, I, P.N), c),
                                      sv::unit(detail::mono_index(J - n, P.modN(I + n), P.N), -c));
                    }
                    h.mult[static_cast<std::size_t>(detail::mono_index(j1, i1, P.N)) * h.dim +
                           detail::mono_index(j2, i2, P.N)] = std::move(out);
                }
    const int x = detail::mono_index(1, 0, P.N), g = detail::mono_index(0, 1, P.N),
              e0 = detail::mono_index(0, 0, P.N);
    const SVec dx = sv::add(sv::unit(x * h.dim + e0), sv::unit(g * h.dim + x));
    const SVec dg = sv::unit(g * h.dim + g);
    detail::finish_hopf(h, n, P.N, dx, dg, P.zero(), P.one());
    return h;
}

// Generalized Taft algebra T_{n,m}: as R_{n,m} but with x^n = 0.
inline FDHopf build_taft_gen(int n, int m) {
    const Params P(n, m);
    FDHopf h;
    h.name = "T(" + std::to_string(n) + "," + std::to_string(m) + ")";
    h.dim = n * n * m;
    h.field_order = P.N;
    h.labels.resize(static_cast<std::size_t>(h.dim));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < P.N; ++i)
            h.labels[static_cast<std::size_t>(detail::mono_index(j, i, P.N))] = {j, i};
    h.mult.resize(static_cast<std::size_t>(h.dim) * h.dim);
    for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < P.N; ++i1)
            for (int j2 = 0; j2 < n; ++j2)
                for (int i2 = 0; i2 < P.N; ++i2) {
                    const Cyc c = P.omega(static_cast<long>(i1) * j2);
                    const int J = j1 + j2, I = P.modN(i1 + i2);
                    SVec out;
                    if (J < n) out = sv::unit(detail::mono_index(J, I, P.N), c);
                    h.mult[static_cast<std::size_t>(detail::mono_index(j1, i1, P.N)) * h.dim +
                           detail::mono_index(j2, i2, P.N)] = std::move(out);
                }
    const int x = detail::mono_index(1, 0, P.N), g = detail::mono_index(0, 1, P.N),
              e0 = detail::mono_index(0, 0, P.N);
    const SVec dx = sv::add(sv::unit(x * h.dim + e0), sv::unit(g * h.dim + x));
    const SVec dg = sv::unit(g * h.dim + g);
    detail::finish_hopf(h, n, P.N, dx, dg, P.zero(), P.one());
    return h;
}

// gamma_{n,k} = (1 - xi^n) / ((k)_w! (n-k)_w!)
inline Cyc gamma_nk(const Params& P, int k) {
    const Cyc w = P.omega();
    return (P.one() - P.xi(P.n)) / (qfact(k, w) * qfact(P.n - k, w));
}

// Dual Radford algebra H_{n,m}: basis { X^a A^b : 0 <= a < n, 0 <= b < nm }
// with X^n = 0, AX = xi XA, A^{nm} = 1, U = A^m; X is (1,U)-primitive and
// Delta(A) = A (x) A + sum_k gamma_{n,k} X^{n-k} U^k A (x) X^k A.
inline FDHopf build_dual_radford(int n, int m) {
    const Params P(n, m);
    FDHopf h;
    h.name = "H(" + std::to_string(n) + "," + std::to_string(m) + ")";
    h.dim = n * n * m;
    h.field_order = P.N;
    h.labels.resize(static_cast<std::size_t>(h.dim));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < P.N; ++b)
            h.labels[static_cast<std::size_t>(detail::mono_index(a, b, P.N))] = {a, b};
    h.mult.resize(static_cast<std::size_t>(h.dim) * h.dim);
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < P.N; ++b1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < P.N; ++b2) {
                    // (X^{a1} A^{b1})(X^{a2} A^{b2}) = xi^{b1 a2} X^{a1+a2} A^{b1+b2}
                    SVec out;
                    if (a1 + a2 < n)
                        out = sv::unit(detail::mono_index(a1 + a2, P.modN(b1 + b2), P.N),
                                       P.xi(static_cast<long>(b1) * a2));
                    h.mult[static_cast<std::size_t>(detail::mono_index(a1, b1, P.N)) * h.dim +
                           detail::mono_index(a2, b2, P.N)] = std::move(out);
                }
    const int X = detail::mono_index(1, 0, P.N), A = detail::mono_index(0, 1, P.N),
              U = detail::mono_index(0, m, P.N), e0 = detail::mono_index(0, 0, P.N);
    const SVec dX = sv::add(sv::unit(X * h.dim + e0), sv::unit(U * h.dim + X));
    SVec dA = sv::unit(A * h.dim + A);
    for (int k = 1; k < n; ++k) {
        const int left = detail::mono_index(n - k, P.modN(static_cast<long>(k) * m + 1), P.N);
        const int right = detail::mono_index(k, 1, P.N);
        dA = sv::add(dA, sv::unit(left * h.dim + right, gamma_nk(P, k)));
    }
    detail::finish_hopf(h, n, P.N, dX, dA, P.zero(), P.one());
    return h;
}

// Hopf pairing <X^a A^b, x^c g^d> = delta_{a,c} xi^{bd} (a)_w!, H x R.
struct HopfPairing {
    int n = 0, m = 0;
    CycMat values;  // rows indexed by H-basis, columns by R-basis

    const Cyc& at(int h_idx, int r_idx) const { return values.at(h_idx, r_idx); }
};

inline HopfPairing pairing(int n, int m) {
    const Params P(n, m);
    const int dim = n * n * m;
    HopfPairing pr;
    pr.n = n;
    pr.m = m;
    pr.values = CycMat(dim, dim, P.N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < P.N; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < P.N; ++d) {
                    if (a != c) continue;
                    pr.values.at(detail::mono_index(a, b, P.N), detail::mono_index(c, d, P.N)) =
                        P.xi(static_cast<long>(b) * d) * qfact(a, P.omega());
                }
    return pr;
}

// <f, r> for sparse elements f of H and r of R.
inline Cyc pair_elems(const HopfPairing& pr, const SVec& f, const SVec& r) {
    Cyc acc = Cyc::zero(pr.values.at(0, 0).order());
    for (const auto& [i, ci] : f)
        for (const auto& [j, cj] : r) {
            const Cyc& v = pr.at(i, j);
            if (!v.is_zero()) acc += ci * cj * v;
        }
    return acc;
}

}  // namespace radford
