#pragma once

#include <memory>
#include <tuple>

#include "radford/dmodule.hpp"

namespace radford {

enum class HostKind { DualRadford, Radford, Taft };

// A module-and-comodule over one of the three hosts. Actions are stored for
// the two algebra generators (A, X for the dual Radford host, g, x for the
// Radford/Taft hosts); the coaction is a sparse list of
// (host basis monomial, coefficient, target index) triples per basis vector.
struct YDModule {
    std::shared_ptr<const FDHopf> host;
    HostKind kind = HostKind::Taft;
    int n = 0, m = 0, N = 0, dim = 0;
    CycMat act_grp;  // A or g
    CycMat act_nil;  // X or x
    std::vector<std::vector<std::tuple<int, Cyc, int>>> coaction;
    std::optional<std::pair<int, int>> label;

    // action of the host basis monomial with label (a, b): X^a A^b or x^a g^b
    CycMat action_of_monomial(int host_idx) const {
        const auto& lb = host->labels[static_cast<std::size_t>(host_idx)];
        return act_nil.pow(lb[0]) * act_grp.pow(lb[1]);
    }
};

// Module relations, comodule axioms, and the Yetter-Drinfeld compatibility
// lambda(h.v) = h_1 v_{-1} S(h_3) (x) h_2.v_0, all exact.
inline Report verify_yd(const YDModule& Y) {
    const Params P(Y.n, Y.m);
    Report rep;
    const FDHopf& host = *Y.host;
    const int d = Y.dim, hd = host.dim;
    const CycMat I = CycMat::identity(d, Y.N);

    switch (Y.kind) {
        case HostKind::DualRadford:
            rep.check(Y.act_grp.pow(P.N) == I, "A^{nm} = 1");
            rep.check(Y.act_nil.pow(Y.n).is_zero(), "X^n = 0");
            rep.check(Y.act_grp * Y.act_nil == P.xi() * (Y.act_nil * Y.act_grp), "AX = xi XA");
            break;
        case HostKind::Radford:
            rep.check(Y.act_grp.pow(P.N) == I, "g^{nm} = 1");
            rep.check(Y.act_nil.pow(Y.n) == I - Y.act_grp.pow(Y.n), "x^n = 1 - g^n");
            rep.check(Y.act_grp * Y.act_nil == P.omega() * (Y.act_nil * Y.act_grp), "gx = w xg");
            break;
        case HostKind::Taft:
            rep.check(Y.act_grp.pow(P.N) == I, "g^{nm} = 1");
            rep.check(Y.act_nil.pow(Y.n).is_zero(), "x^n = 0");
            rep.check(Y.act_grp * Y.act_nil == P.omega() * (Y.act_nil * Y.act_grp), "gx = w xg");
            break;
    }

    // comodule: (Delta (x) id) rho = (id (x) rho) rho and (eps (x) id) rho = id
    bool coassoc = true, counit = true;
    for (int t = 0; t < d; ++t) {
        std::map<long long, Cyc> lhs;
        for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(t)]) {
            for (const auto& [pq, cc] : host.comult[static_cast<std::size_t>(p)]) {
                const long long key = (static_cast<long long>(pq / hd) * hd + pq % hd) * d + s;
                auto it = lhs.find(key);
                if (it == lhs.end()) lhs.emplace(key, c * cc); else it->second += c * cc;
            }
        }
        for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(t)])
            for (const auto& [p2, c2, s2] : Y.coaction[static_cast<std::size_t>(s)]) {
                const long long key = (static_cast<long long>(p) * hd + p2) * d + s2;
                auto it = lhs.find(key);
                if (it == lhs.end()) lhs.emplace(key, -(c * c2)); else it->second -= c * c2;
            }
        for (const auto& [k, v] : lhs) coassoc = coassoc && v.is_zero();

        std::map<int, Cyc> cnt;
        for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(t)])
            sv::add_into(cnt, sv::unit(s), c * host.counit[static_cast<std::size_t>(p)]);
        counit = counit && sv::equal(sv::from_map(std::move(cnt)), sv::unit(t));
    }
    rep.check(coassoc, "comodule coassociativity");
    rep.check(counit, "comodule counit");

    // YD compatibility for the two generators (multiplicative in h)
    const int gen_grp = 1;    // basis label (0,1): A resp. g
    const int gen_nil = Y.N;  // basis label (1,0): X resp. x
    bool yd = true;
    for (int which = 0; which < 2 && yd; ++which) {
        const int h = which == 0 ? gen_grp : gen_nil;
        const CycMat& act_h = which == 0 ? Y.act_grp : Y.act_nil;
        for (int t = 0; t < d && yd; ++t) {
            // lambda(h.v_t)
            std::map<long long, Cyc> lhs;
            for (int u = 0; u < d; ++u) {
                const Cyc& cu = act_h.at(u, t);
                if (cu.is_zero()) continue;
                for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(u)]) {
                    const long long key = static_cast<long long>(p) * d + s;
                    auto it = lhs.find(key);
                    if (it == lhs.end()) lhs.emplace(key, cu * c); else it->second += cu * c;
                }
            }
            // h_1 v_{-1} S(h_3) (x) h_2 . v_0
            for (const auto& [h1, h2, h3, ch] : host.delta2(h)) {
                const CycMat mid = Y.action_of_monomial(h2);
                for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(t)]) {
                    const SVec left =
                        host.mul(host.mul(sv::unit(h1), sv::unit(p)), host.antipode_of(sv::unit(h3)));
                    for (const auto& [li, lc] : left)
                        for (int u = 0; u < d; ++u) {
                            const Cyc& av = mid.at(u, s);
                            if (av.is_zero()) continue;
                            const long long key = static_cast<long long>(li) * d + u;
                            const Cyc add = ch * c * lc * av;
                            auto it = lhs.find(key);
                            if (it == lhs.end()) lhs.emplace(key, -add); else it->second -= add;
                        }
                }
            }
            for (const auto& [k, v] : lhs) yd = yd && v.is_zero();
        }
    }
    rep.check(yd, "Yetter-Drinfeld compatibility");
    return rep;
}

// Braided vector space: an invertible solution of the braid equation on V(x)V,
// indexed so that c(v_s (x) v_t) lives in column s*d + t.
struct BraidedSpace {
    int dim = 0;
    CycMat c;
};

inline bool braid_equation_holds(const BraidedSpace& B) {
    const int d = B.dim;
    const CycMat I = CycMat::identity(d, 1);
    const CycMat c1 = kron(B.c, I);
    const CycMat c2 = kron(I, B.c);
    return c1 * (c2 * c1) == c2 * (c1 * c2);
}

// c(v_s (x) v_t) = v_s(-1) . v_t (x) v_s(0)
inline BraidedSpace braiding_of(const YDModule& Y) {
    const int d = Y.dim;
    BraidedSpace B;
    B.dim = d;
    B.c = CycMat(d * d, d * d, Y.N);
    for (int s = 0; s < d; ++s) {
        for (const auto& [p, coeff, s0] : Y.coaction[static_cast<std::size_t>(s)]) {
            const CycMat act = Y.action_of_monomial(p);
            for (int t = 0; t < d; ++t)
                for (int u = 0; u < d; ++u) {
                    if (act.at(u, t).is_zero()) continue;
                    B.c.at(u * d + s0, s * d + t) += coeff * act.at(u, t);
                }
        }
    }
    if (!braid_equation_holds(B)) throw VerificationError("braid equation failed");
    if (rank(B.c) != d * d) throw VerificationError("braiding is not invertible");
    return B;
}

inline BraidedSpace make_diagonal_braiding(const CycMat& q) {
    const int d = q.rows();
    BraidedSpace B;
    B.dim = d;
    B.c = CycMat(d * d, d * d, 1);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) B.c.at(t * d + s, s * d + t) = q.at(s, t);
    return B;
}

// The transport chain D-modules -> YD over H -> YD over R -> YD over T, each
// step through its defining formula; closed forms are asserted in the tests.
class Transport {
public:
    Transport(int n, int m)
        : P_(n, m),
          H_(std::make_shared<FDHopf>(build_dual_radford(n, m))),
          R_(std::make_shared<FDHopf>(build_radford(n, m))),
          T_(std::make_shared<FDHopf>(build_taft_gen(n, m))),
          pr_(pairing(n, m)),
          pairing_T_inv_(inverse(pr_.values.transpose())),
          S_R_inv_(inverse(R_->antipode)) {}

    const Params& params() const { return P_; }
    const FDHopf& hostH() const { return *H_; }
    const FDHopf& hostR() const { return *R_; }
    const FDHopf& hostT() const { return *T_; }
    const HopfPairing& pair() const { return pr_; }

    // D-module to YD module over H: same action of A and X; the coaction is
    // the unique solution of  f . v = <f, v_{-1}> v_0  for all f in R.
    YDModule F1(const DModule& M) const {
        YDModule Y;
        Y.host = H_;
        Y.kind = HostKind::DualRadford;
        Y.n = P_.n;
        Y.m = P_.m;
        Y.N = P_.N;
        Y.dim = M.dim;
        Y.act_grp = M.act_A;
        Y.act_nil = M.act_X;
        Y.label = M.label;
        const int hd = H_->dim;
        Y.coaction.assign(static_cast<std::size_t>(M.dim), {});
        for (int t = 0; t < M.dim; ++t)
            for (int s = 0; s < M.dim; ++s) {
                // rhs over the R-basis: action of x^c g^d # 1 = w^{-cd} x^c g^d
                std::vector<Cyc> rhs(static_cast<std::size_t>(hd), Cyc::zero(P_.N));
                bool nonzero = false;
                for (int c = 0; c < P_.n; ++c) {
                    const CycMat xc = M.act_x.pow(c);
                    for (int dd = 0; dd < P_.N; ++dd) {
                        const CycMat op = xc * M.act_g.pow(dd);
                        const Cyc v = P_.omega(-static_cast<long>(c) * dd) * op.at(s, t);
                        rhs[static_cast<std::size_t>(c * P_.N + dd)] = v;
                        nonzero = nonzero || !v.is_zero();
                    }
                }
                if (!nonzero) continue;
                // solve P^T u = rhs for the H-coefficients u
                std::vector<Cyc> u(static_cast<std::size_t>(hd), Cyc::zero(P_.N));
                for (int p = 0; p < hd; ++p) {
                    Cyc acc = Cyc::zero(P_.N);
                    for (int r = 0; r < hd; ++r) acc += pairing_T_inv_.at(p, r) * rhs[static_cast<std::size_t>(r)];
                    if (!acc.is_zero()) Y.coaction[static_cast<std::size_t>(t)].emplace_back(p, acc, s);
                }
            }
        for (auto& row : Y.coaction)
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
                return std::make_pair(std::get<0>(a), std::get<2>(a)) <
                       std::make_pair(std::get<0>(b), std::get<2>(b));
            });
        const Report rep = verify_yd(Y);
        if (!rep.ok) throw VerificationError("F1 output failed YD verification");
        return Y;
    }

    // YD over H to YD over R = H^*: action r.v = <S_H(v_{-1}), r> v_0 and
    // coaction lambda(v) = sum_i S_R^{-1}(u_i) (x) h_i . v over dual bases.
    YDModule F2(const YDModule& Yh) const {
        YDModule Y;
        Y.host = R_;
        Y.kind = HostKind::Radford;
        Y.n = P_.n;
        Y.m = P_.m;
        Y.N = P_.N;
        Y.dim = Yh.dim;
        Y.label = Yh.label;
        const int d = Yh.dim;

        auto action_of = [&](int r_idx) {
            CycMat act(d, d, P_.N);
            for (int t = 0; t < d; ++t)
                for (const auto& [p, c, s] : Yh.coaction[static_cast<std::size_t>(t)]) {
                    Cyc val = Cyc::zero(P_.N);
                    for (const auto& [q, cq] : H_->antipode_of(sv::unit(p)))
                        val += cq * pr_.at(q, r_idx);
                    act.at(s, t) += c * val;
                }
            return act;
        };
        Y.act_grp = action_of(0 * P_.N + 1);  // g
        Y.act_nil = action_of(1 * P_.N + 0);  // x

        Y.coaction.assign(static_cast<std::size_t>(d), {});
        for (int a = 0; a < P_.n; ++a)
            for (int b = 0; b < P_.N; ++b) {
                // u_{a,b} = x^a / (nm (a)_w!) sum_d xi^{-bd} g^d
                SVec u;
                const Cyc scale =
                    (Cyc::rational(Rational(1, P_.N), P_.N) / qfact(a, P_.omega()));
                for (int dd = 0; dd < P_.N; ++dd)
                    u.emplace_back(a * P_.N + dd, scale * P_.xi(-static_cast<long>(b) * dd));
                const SVec su = FDHopf::apply_matrix(S_R_inv_, u);
                const CycMat act = Yh.act_nil.pow(a) * Yh.act_grp.pow(b);  // X^a A^b
                for (int t = 0; t < d; ++t)
                    for (int s = 0; s < d; ++s) {
                        if (act.at(s, t).is_zero()) continue;
                        for (const auto& [ri, rc] : su)
                            append_coaction(Y.coaction[static_cast<std::size_t>(t)], ri,
                                            rc * act.at(s, t), s);
                    }
            }
        normalize_coaction(Y);
        const Report rep = verify_yd(Y);
        if (!rep.ok) throw VerificationError("F2 output failed YD verification");
        return Y;
    }

    // YD over R to YD over T: identical coaction, action twisted by the
    // 2-cocycle sigma^{-1} = eps(x)eps - eta, with
    // eta(x^a g^r, x^b g^s) = w^{br} when a + b = n and 0 otherwise.
    YDModule F3(const YDModule& Yr) const { return twist(Yr, -1); }

    // Cocycle twist with tau = eps(x)eps + sign*eta (sign = -1 maps the
    // Radford action to the Taft action; sign = +1 is the inverse twist).
    YDModule twist(const YDModule& Yin, int sign) const {
        YDModule Y;
        Y.host = sign < 0 ? T_ : R_;
        Y.kind = sign < 0 ? HostKind::Taft : HostKind::Radford;
        Y.n = P_.n;
        Y.m = P_.m;
        Y.N = P_.N;
        Y.dim = Yin.dim;
        Y.label = Yin.label;
        Y.coaction = Yin.coaction;
        const int d = Yin.dim;
        const Cyc sgn = Cyc::integer(sign, P_.N);

        auto eta = [&](int h_idx, int p_idx) {
            const auto& lh = T_->labels[static_cast<std::size_t>(h_idx)];
            const auto& lp = T_->labels[static_cast<std::size_t>(p_idx)];
            if (lh[0] + lp[0] != P_.n) return Cyc::zero(P_.N);
            return P_.omega(static_cast<long>(lp[0]) * lh[1]);
        };
        auto tau = [&](int h_idx, int p_idx, int inv) {
            // eps(x)eps +- eta; host counits of basis monomials are 0/1
            const Cyc e = T_->counit[static_cast<std::size_t>(h_idx)] *
                          T_->counit[static_cast<std::size_t>(p_idx)];
            return inv == 0 ? e + sgn * eta(h_idx, p_idx) : e - sgn * eta(h_idx, p_idx);
        };

        auto twist_gen = [&](int h_idx) {
            CycMat out(d, d, P_.N);
            for (const auto& [h1, h2, h3, ch] : T_->delta2(h_idx)) {
                // action of the middle factor through the input action
                const auto& lb = T_->labels[static_cast<std::size_t>(h2)];
                const CycMat mid = Yin.act_nil.pow(lb[0]) * Yin.act_grp.pow(lb[1]);
                for (int t = 0; t < d; ++t)
                    for (const auto& [p, c, s] : Yin.coaction[static_cast<std::size_t>(t)]) {
                        const Cyc left = tau(h1, p, 0);
                        if (left.is_zero()) continue;
                        for (int u = 0; u < d; ++u) {
                            if (mid.at(u, s).is_zero()) continue;
                            for (const auto& [p2, c2, s2] : Yin.coaction[static_cast<std::size_t>(u)]) {
                                const Cyc right = tau(p2, h3, 1);
                                if (right.is_zero()) continue;
                                out.at(s2, t) += ch * c * c2 * left * right * mid.at(u, s);
                            }
                        }
                    }
            }
            return out;
        };
        Y.act_grp = twist_gen(0 * P_.N + 1);
        Y.act_nil = twist_gen(1 * P_.N + 0);
        const Report rep = verify_yd(Y);
        if (!rep.ok) throw VerificationError("cocycle twist output failed YD verification");
        return Y;
    }

    YDModule transport(const DModule& M) const { return F3(F2(F1(M))); }

    // L(lambda_{a,b}): the simple YD module over T_{n,m} spanned by the
    // braided-adjoint orbit of the character (a, b), in its z-basis.
    YDModule build_L(int a, int b) const {
        const int N = P_.N;
        const int am = ((a % N) + N) % N, bm = ((b % N) + N) % N;
        int r;
        if (bm % P_.m != 0) {
            r = P_.n;
        } else {
            r = (-am - bm / P_.m + 1) % P_.n;
            if (r <= 0) r += P_.n;
        }
        YDModule Y;
        Y.host = T_;
        Y.kind = HostKind::Taft;
        Y.n = P_.n;
        Y.m = P_.m;
        Y.N = N;
        Y.dim = r;
        Y.act_grp = CycMat(r, r, N);
        Y.act_nil = CycMat(r, r, N);
        Y.coaction.assign(static_cast<std::size_t>(r), {});
        for (int k = 0; k < r; ++k) {
            Y.act_grp.at(k, k) = P_.xi(bm) * P_.omega(k);
            if (k < r - 1) Y.act_nil.at(k + 1, k) = -(P_.xi(bm) * P_.omega(k));
            for (int l = 0; l <= k; ++l) {
                Cyc beta = Cyc::one(N);
                if (l >= 1) {
                    beta = qbinom(k, l, P_.omega());
                    for (int s = k - l; s <= k - 1; ++s)
                        beta *= P_.omega(am) - P_.xi(-bm) * P_.omega(-s);
                }
                if (beta.is_zero()) continue;
                const int mono = l * N + ((am + k - l) % N + N) % N;  // x^l g^{a+k-l}
                Y.coaction[static_cast<std::size_t>(k)].emplace_back(mono, beta, k - l);
            }
        }
        const Report rep = verify_yd(Y);
        if (!rep.ok) throw VerificationError("L(lambda_{a,b}) failed YD verification");
        return Y;
    }

    // L(lambda_{-i,-j}) and F(V_{i,j}) have identical structure constants.
    bool check_corresp(int i, int j) const {
        const YDModule F = transport(build_simple(P_.n, P_.m, i, j));
        const YDModule L = build_L(-i, -j);
        if (F.dim != L.dim) return false;
        if (F.act_grp != L.act_grp || F.act_nil != L.act_nil) return false;
        for (int t = 0; t < F.dim; ++t) {
            auto a = F.coaction[static_cast<std::size_t>(t)];
            auto b = L.coaction[static_cast<std::size_t>(t)];
            auto canon = [](std::vector<std::tuple<int, Cyc, int>>& v) {
                std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
                    return std::make_pair(std::get<0>(x), std::get<2>(x)) <
                           std::make_pair(std::get<0>(y), std::get<2>(y));
                });
            };
            canon(a);
            canon(b);
            if (a.size() != b.size()) return false;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (std::get<0>(a[k]) != std::get<0>(b[k]) || std::get<2>(a[k]) != std::get<2>(b[k]) ||
                    std::get<1>(a[k]) != std::get<1>(b[k]))
                    return false;
        }
        return true;
    }

private:
    static void append_coaction(std::vector<std::tuple<int, Cyc, int>>& row, int p, const Cyc& c,
                                int s) {
        for (auto& [pp, cc, ss] : row)
            if (pp == p && ss == s) {
                cc += c;
                return;
            }
        row.emplace_back(p, c, s);
    }

    static void normalize_coaction(YDModule& Y) {
        for (auto& row : Y.coaction) {
            std::vector<std::tuple<int, Cyc, int>> keep;
            for (auto& [p, c, s] : row)
                if (!c.is_zero()) keep.emplace_back(p, c, s);
            std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
                return std::make_pair(std::get<0>(a), std::get<2>(a)) <
                       std::make_pair(std::get<0>(b), std::get<2>(b));
            });
            row = std::move(keep);
        }
    }

    Params P_;
    std::shared_ptr<const FDHopf> H_, R_, T_;
    HopfPairing pr_;
    CycMat pairing_T_inv_;
    CycMat S_R_inv_;
};

}  // namespace radford
