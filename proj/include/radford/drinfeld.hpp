#pragma once

#include "radford/builders.hpp"

namespace radford {

// The Drinfeld double D = D(H_{n,m}^cop) on the basis
// { x^a g^b (bowtie) X^c A^d }, built from the double product formula
//   (1 # f)(a # 1) = (f_2 -> a_2) # (f_1 <- a_1)
// with the harpoon actions
//   f -> a = <f, S(a_1) a_3> a_2     and     f <- a = <S(f_1) f_3, a> f_2.
// The factors embed as algebra maps from R^{op,cop} and H^cop; nothing about
// the presentation is hard-coded, relations are checked afterwards.
struct DoubleCtx {
    int n = 0, m = 0, N = 0;
    FDHopf R, H, D;
    HopfPairing P;
    CycMat S_H_inv;

    int didx(int r_idx, int h_idx) const { return r_idx * H.dim + h_idx; }

    SVec embed_r(const SVec& a) const {
        SVec out;
        for (const auto& [i, c] : a) out.emplace_back(didx(i, 0), c);
        return out;
    }
    SVec embed_h(const SVec& f) const {
        SVec out;
        for (const auto& [i, c] : f) out.emplace_back(didx(0, i), c);
        return out;
    }

    // generators of D
    SVec g() const { return sv::unit(didx(r_mono(0, 1), 0)); }
    SVec x() const { return sv::unit(didx(r_mono(1, 0), 0)); }
    SVec X() const { return sv::unit(didx(0, h_mono(1, 0))); }
    SVec A() const { return sv::unit(didx(0, h_mono(0, 1))); }
    SVec U() const { return sv::unit(didx(0, h_mono(0, m))); }

    int r_mono(int xexp, int gexp) const { return xexp * N + gexp; }
    int h_mono(int Xexp, int Aexp) const { return Xexp * N + Aexp; }
};

inline DoubleCtx build_double_ctx(int n, int m) {
    const Params Pm(n, m);
    DoubleCtx ctx;
    ctx.n = n;
    ctx.m = m;
    ctx.N = Pm.N;
    ctx.R = build_radford(n, m);
    ctx.H = build_dual_radford(n, m);
    ctx.P = pairing(n, m);

    const FDHopf& R = ctx.R;
    const FDHopf& H = ctx.H;
    const int dr = R.dim, dh = H.dim;

    // f -> a = <f, S(a_1) a_3> a_2, for every H-basis f and R-basis a
    std::vector<std::vector<SVec>> harpL(static_cast<std::size_t>(dh),
                                         std::vector<SVec>(static_cast<std::size_t>(dr)));
    for (int a = 0; a < dr; ++a) {
        std::vector<std::map<int, Cyc>> acc(static_cast<std::size_t>(dh));
        for (const auto& [p, q, s, c] : R.delta2(a)) {
            const SVec w = R.mul(R.antipode_of(sv::unit(p)), sv::unit(s));
            for (int f = 0; f < dh; ++f) {
                Cyc val = Cyc::zero(ctx.N);
                for (const auto& [j, cj] : w) val += cj * ctx.P.at(f, j);
                if (!val.is_zero()) sv::add_into(acc[static_cast<std::size_t>(f)], sv::unit(q), c * val);
            }
        }
        for (int f = 0; f < dh; ++f)
            harpL[static_cast<std::size_t>(f)][static_cast<std::size_t>(a)] =
                sv::from_map(std::move(acc[static_cast<std::size_t>(f)]));
    }

    // f <- a = <S(f_1) f_3, a> f_2
    std::vector<std::vector<SVec>> harpR(static_cast<std::size_t>(dh),
                                         std::vector<SVec>(static_cast<std::size_t>(dr)));
    for (int f = 0; f < dh; ++f) {
        std::vector<std::map<int, Cyc>> acc(static_cast<std::size_t>(dr));
        for (const auto& [p, q, s, c] : H.delta2(f)) {
            const SVec w = H.mul(H.antipode_of(sv::unit(p)), sv::unit(s));
            for (int a = 0; a < dr; ++a) {
                Cyc val = Cyc::zero(ctx.N);
                for (const auto& [i, ci] : w) val += ci * ctx.P.at(i, a);
                if (!val.is_zero()) sv::add_into(acc[static_cast<std::size_t>(a)], sv::unit(q), c * val);
            }
        }
        for (int a = 0; a < dr; ++a)
            harpR[static_cast<std::size_t>(f)][static_cast<std::size_t>(a)] =
                sv::from_map(std::move(acc[static_cast<std::size_t>(a)]));
    }

    // straighten(f, a) = (1 # f)(a # 1) = sum (f_2 -> a_2) # (f_1 <- a_1)
    std::vector<SVec> straighten(static_cast<std::size_t>(dh) * dr);
    for (int f = 0; f < dh; ++f)
        for (int a = 0; a < dr; ++a) {
            std::map<int, Cyc> acc;
            for (const auto& [tf, cf] : H.comult[static_cast<std::size_t>(f)]) {
                const int f1 = tf / dh, f2 = tf % dh;
                for (const auto& [ta, ca] : R.comult[static_cast<std::size_t>(a)]) {
                    const int a1 = ta / dr, a2 = ta % dr;
                    const Cyc c = cf * ca;
                    const SVec& rv = harpL[static_cast<std::size_t>(f2)][static_cast<std::size_t>(a2)];
                    const SVec& hv = harpR[static_cast<std::size_t>(f1)][static_cast<std::size_t>(a1)];
                    for (const auto& [ri, rc] : rv)
                        for (const auto& [hi, hc] : hv)
                            sv::add_into(acc, sv::unit(ri * dh + hi), c * rc * hc);
                }
            }
            straighten[static_cast<std::size_t>(f) * dr + a] = sv::from_map(std::move(acc));
        }

    FDHopf& D = ctx.D;
    D.name = "D(" + std::to_string(n) + "," + std::to_string(m) + ")";
    D.dim = dr * dh;
    D.field_order = ctx.N;
    D.labels.resize(static_cast<std::size_t>(D.dim));
    for (int r = 0; r < dr; ++r)
        for (int h = 0; h < dh; ++h)
            D.labels[static_cast<std::size_t>(r) * dh + h] = {R.labels[static_cast<std::size_t>(r)][0],
                                                              R.labels[static_cast<std::size_t>(r)][1],
                                                              H.labels[static_cast<std::size_t>(h)][0],
                                                              H.labels[static_cast<std::size_t>(h)][1]};

    // (a # f)(a' # f') = sum_t (r_t a) # (h_t f') over straighten(f, a') = sum_t r_t # h_t.
    // The R factor sits inside D with the opposite product, so left
    // multiplication by a # 1 puts a on the right in R.
    D.mult.resize(static_cast<std::size_t>(D.dim) * D.dim);
    for (int a = 0; a < dr; ++a)
        for (int f = 0; f < dh; ++f)
            for (int a2 = 0; a2 < dr; ++a2)
                for (int f2 = 0; f2 < dh; ++f2) {
                    std::map<int, Cyc> acc;
                    for (const auto& [t, c] : straighten[static_cast<std::size_t>(f) * dr + a2]) {
                        const int rt = t / dh, ht = t % dh;
                        for (const auto& [u, cu] : R.basis_product(rt, a))
                            for (const auto& [v, cv] : H.basis_product(ht, f2))
                                sv::add_into(acc, sv::unit(u * dh + v), c * cu * cv);
                    }
                    D.mult[static_cast<std::size_t>(ctx.didx(a, f)) * D.dim + ctx.didx(a2, f2)] =
                        sv::from_map(std::move(acc));
                }

    // tensor-product coalgebra of R^{op,cop} and H^cop
    D.comult.resize(static_cast<std::size_t>(D.dim));
    for (int a = 0; a < dr; ++a)
        for (int f = 0; f < dh; ++f) {
            std::map<int, Cyc> acc;
            for (const auto& [ta, ca] : R.comult[static_cast<std::size_t>(a)]) {
                const int a1 = ta / dr, a2 = ta % dr;
                for (const auto& [tf, cf] : H.comult[static_cast<std::size_t>(f)]) {
                    const int f1 = tf / dh, f2 = tf % dh;
                    sv::add_into(acc, sv::unit(ctx.didx(a2, f2) * D.dim + ctx.didx(a1, f1)), ca * cf);
                }
            }
            D.comult[static_cast<std::size_t>(ctx.didx(a, f))] = sv::from_map(std::move(acc));
        }

    D.counit.assign(static_cast<std::size_t>(D.dim), Cyc::zero(ctx.N));
    for (int a = 0; a < dr; ++a)
        for (int f = 0; f < dh; ++f)
            D.counit[static_cast<std::size_t>(ctx.didx(a, f))] =
                R.counit[static_cast<std::size_t>(a)] * H.counit[static_cast<std::size_t>(f)];
    D.unit = sv::unit(ctx.didx(0, 0));

    // S_D(a # f) = (1 # S_H^{-1}(f)) (S_R(a) # 1); the factor antipodes are
    // those of R^{op,cop} (= S_R) and H^cop (= S_H^{-1}).
    ctx.S_H_inv = inverse(H.antipode);
    D.antipode = CycMat(D.dim, D.dim, ctx.N);
    for (int a = 0; a < dr; ++a) {
        const SVec sa = ctx.embed_r(R.antipode_of(sv::unit(a)));
        for (int f = 0; f < dh; ++f) {
            const SVec sf = ctx.embed_h(FDHopf::apply_matrix(ctx.S_H_inv, sv::unit(f)));
            const SVec img = D.mul(sf, sa);
            for (const auto& [i, c] : img) D.antipode.at(i, ctx.didx(a, f)) = c;
        }
    }

    // antipode axiom on the generators; with S anti-multiplicative this
    // propagates to all products
    for (const SVec& gen : {ctx.g(), ctx.x(), ctx.X(), ctx.A()}) {
        std::map<int, Cyc> accl, accr;
        for (const auto& [i, ci] : gen)
            for (const auto& [t, c] : D.comult[static_cast<std::size_t>(i)]) {
                const int p = t / D.dim, q = t % D.dim;
                sv::add_into(accl, D.mul(D.antipode_of(sv::unit(p)), sv::unit(q)), ci * c);
                sv::add_into(accr, D.mul(sv::unit(p), D.antipode_of(sv::unit(q))), ci * c);
            }
        const SVec want = sv::scale(D.unit, D.eps(gen));
        if (!sv::equal(sv::from_map(std::move(accl)), want) ||
            !sv::equal(sv::from_map(std::move(accr)), want))
            throw VerificationError("double antipode axiom failed on a generator");
    }

    return ctx;
}

inline FDHopf build_double(int n, int m) { return build_double_ctx(n, m).D; }

// Elementwise identities of the presentation of D: the factor relations with
// the appropriate decorations, the cross relations, and the Gamma identities.
inline Report verify_double_presentation(const DoubleCtx& ctx) {
    const Params P(ctx.n, ctx.m);
    const FDHopf& D = ctx.D;
    const int n = ctx.n;
    Report rep;

    const SVec g = ctx.g(), x = ctx.x(), X = ctx.X(), A = ctx.A(), U = ctx.U(), one = D.unit;
    auto mul = [&](const SVec& a, const SVec& b) { return D.mul(a, b); };
    auto pw = [&](const SVec& a, long e) { return D.power(a, e); };
    auto sc = [&](const Cyc& c, const SVec& a) { return sv::scale(a, c); };

    rep.check(sv::equal(pw(g, P.N), one), "g^{nm} = 1");
    rep.check(sv::equal(pw(x, n), sv::sub(one, pw(g, n))), "x^n = 1 - g^n");
    rep.check(sv::equal(mul(x, g), sc(P.omega(), mul(g, x))), "xg = w gx  (opposite Radford relation)");
    rep.check(sv::equal(pw(U, n), one), "U^n = 1");
    rep.check(pw(X, n).empty(), "X^n = 0");
    rep.check(sv::equal(pw(A, ctx.m), U), "A^m = U");
    rep.check(sv::equal(mul(U, X), sc(P.omega(), mul(X, U))), "UX = w XU");
    rep.check(sv::equal(mul(U, A), mul(A, U)), "UA = AU");
    rep.check(sv::equal(mul(A, X), sc(P.xi(), mul(X, A))), "AX = xi XA");
    rep.check(sv::equal(mul(A, g), mul(g, A)), "Ag = gA");
    rep.check(sv::equal(mul(g, X), sc(P.omega(), mul(X, g))), "gX = w Xg");
    rep.check(sv::equal(mul(x, X), sv::add(sc(P.omega(), mul(X, x)), sv::sub(one, mul(U, g)))),
              "xX = w Xx + (1 - Ug)");
    {
        const SVec inner = sv::sub(one, sc(P.omega(n - 1), mul(U, g)));
        const SVec rhs = sv::add(sc(P.xi(), mul(A, x)),
                                 sc(gamma_nk(P, 1), mul(pw(X, n - 1), mul(inner, A))));
        rep.check(sv::equal(mul(x, A), rhs), "xA = xi Ax + gamma_{n,1} X^{n-1}(1 - w^{n-1} Ug) A");
    }
    rep.check(sv::equal(mul(U, g), mul(g, U)), "Ug = gU");
    rep.check(sv::equal(mul(x, U), sc(P.omega(), mul(U, x))), "xU = w Ux");

    auto Gamma = [&](long k) { return sv::sub(one, sc(P.omega(k), mul(U, g))); };

    bool pass = true;
    for (int r = 0; r <= n - 1 && pass; ++r)
        for (int s = 0; s <= n - 1 && pass; ++s)
            for (long k = 0; k <= 2 * n && pass; ++k) {
                const SVec XrXs = mul(pw(X, r), pw(x, s));
                pass = sv::equal(mul(XrXs, Gamma(k)), mul(Gamma(k - 2 * r + 2 * s), XrXs));
            }
    rep.check(pass, "X^r x^s Gamma(k) = Gamma(k - 2r + 2s) X^r x^s");

    pass = true;
    for (int k = 1; k <= n && pass; ++k) {
        const SVec lhs = mul(x, pw(X, k));
        const SVec rhs = sv::add(sc(P.omega(k), mul(pw(X, k), x)),
                                 sc(qnum(k, P.omega()), mul(pw(X, k - 1), Gamma(k - 1))));
        pass = sv::equal(lhs, rhs);
    }
    rep.check(pass, "xX^k = w^k X^k x + (k)_w X^{k-1} Gamma(k-1)");

    pass = true;
    for (int k = 1; k <= n && pass; ++k) {
        const SVec lhs = mul(pw(x, k), X);
        const SVec rhs = sv::add(sc(P.omega(k), mul(X, pw(x, k))),
                                 sc(qnum(k, P.omega()), mul(Gamma(k - 1), pw(x, k - 1))));
        pass = sv::equal(lhs, rhs);
    }
    rep.check(pass, "x^k X = w^k X x^k + (k)_w Gamma(k-1) x^{k-1}");

    pass = true;
    for (int k = 1; k <= n - 1 && pass; ++k) {
        const SVec Xkxk = mul(pw(X, k), pw(x, k));
        pass = sv::equal(mul(Xkxk, A), mul(A, Xkxk));
    }
    rep.check(pass, "(X^k x^k) A = A (X^k x^k)");

    return rep;
}

// The embeddings a -> a#1 (from R^{op,cop}) and f -> 1#f (from H^cop) are
// algebra maps; checked on all basis pairs.
inline bool double_embeddings_are_algebra_maps(const DoubleCtx& ctx) {
    const FDHopf& D = ctx.D;
    for (int a = 0; a < ctx.R.dim; ++a)
        for (int b = 0; b < ctx.R.dim; ++b) {
            // opposite product on the R side
            const SVec lhs = D.mul(sv::unit(ctx.didx(a, 0)), sv::unit(ctx.didx(b, 0)));
            if (!sv::equal(lhs, ctx.embed_r(ctx.R.basis_product(b, a)))) return false;
        }
    for (int f = 0; f < ctx.H.dim; ++f)
        for (int h = 0; h < ctx.H.dim; ++h) {
            const SVec lhs = D.mul(sv::unit(ctx.didx(0, f)), sv::unit(ctx.didx(0, h)));
            if (!sv::equal(lhs, ctx.embed_h(ctx.H.basis_product(f, h)))) return false;
        }
    return true;
}

}  // namespace radford
