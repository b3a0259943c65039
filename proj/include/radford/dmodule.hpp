#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "radford/drinfeld.hpp"

namespace radford {

// Finite-dimensional left module over D(H_{n,m}^cop), stored through the
// action matrices of the generators. act_U is derived as act_A^m.
struct DModule {
    int n = 0, m = 0, N = 0, dim = 0;
    CycMat act_g, act_x, act_X, act_A;
    std::optional<std::pair<int, int>> label;
    std::string name;

    CycMat act_U() const { return act_A.pow(m); }

    const CycMat& gen(int k) const {
        switch (k) {
            case 0: return act_g;
            case 1: return act_x;
            case 2: return act_X;
            default: return act_A;
        }
    }
};

// Representative in {1,...,n} of the dimension parameter r_{ij}.
inline int r_of(int n, int m, int i, int j) {
    if (j % m != 0) return n;
    int r = (i + j / m + 1) % n;
    if (r < 0) r += n;
    return r == 0 ? n : r;
}

// c_k = (k)_w w^{-k} (xi^j w^{-k+1+i} - 1)
inline Cyc sol_ck(const Params& P, int i, int j, int k) {
    return qnum(k, P.omega()) * P.omega(-k) * (P.xi(j) * P.omega(-k + 1 + i) - P.one());
}

// Operator identities of the presentation, as matrices on the module.
inline Report verify_dmodule(const DModule& M) {
    const Params P(M.n, M.m);
    const int n = M.n, d = M.dim;
    Report rep;
    const CycMat I = CycMat::identity(d, M.N);
    const CycMat &g = M.act_g, &x = M.act_x, &X = M.act_X, &A = M.act_A;
    const CycMat U = M.act_U();

    rep.check(g.pow(P.N) == I, "g^{nm} = 1");
    rep.check(x.pow(n) == I - g.pow(n), "x^n = 1 - g^n");
    rep.check(x * g == P.omega() * (g * x), "xg = w gx");
    rep.check(U.pow(n) == I, "U^n = 1");
    rep.check(X.pow(n).is_zero(), "X^n = 0");
    rep.check(U * X == P.omega() * (X * U), "UX = w XU");
    rep.check(U * A == A * U, "UA = AU");
    rep.check(A * X == P.xi() * (X * A), "AX = xi XA");
    rep.check(A * g == g * A, "Ag = gA");
    rep.check(g * X == P.omega() * (X * g), "gX = w Xg");
    rep.check(x * X == P.omega() * (X * x) + (I - U * g), "xX = w Xx + (1 - Ug)");
    rep.check(x * A == P.xi() * (A * x) +
                           gamma_nk(P, 1) * (X.pow(n - 1) * ((I - P.omega(n - 1) * (U * g)) * A)),
              "xA = xi Ax + gamma_{n,1} X^{n-1} (1 - w^{n-1} Ug) A");
    rep.check(x * U == P.omega() * (U * x), "xU = w Ux");

    // the Gamma identities, as operators
    auto Gamma = [&](long k) { return I - P.omega(k) * (U * g); };
    bool pass = true;
    for (int rr = 0; rr <= n - 1 && pass; ++rr)
        for (int s = 0; s <= n - 1 && pass; ++s)
            for (long k = 0; k <= 2 * n && pass; ++k) {
                const CycMat XrXs = X.pow(rr) * x.pow(s);
                pass = XrXs * Gamma(k) == Gamma(k - 2 * rr + 2 * s) * XrXs;
            }
    rep.check(pass, "X^r x^s Gamma(k) = Gamma(k - 2r + 2s) X^r x^s");
    pass = true;
    for (int k = 1; k <= n && pass; ++k) {
        pass = x * X.pow(k) ==
                   P.omega(k) * (X.pow(k) * x) + qnum(k, P.omega()) * (X.pow(k - 1) * Gamma(k - 1)) &&
               x.pow(k) * X ==
                   P.omega(k) * (X * x.pow(k)) + qnum(k, P.omega()) * (Gamma(k - 1) * x.pow(k - 1));
        if (k <= n - 1) {
            const CycMat Xkxk = X.pow(k) * x.pow(k);
            pass = pass && Xkxk * A == A * Xkxk;
        }
    }
    rep.check(pass, "Gamma recursion identities");

    // act_g and act_A are diagonalizable with eigenvalues among powers of xi
    auto semisimple = [&](const CycMat& mtx) {
        CycMat prod = CycMat::identity(d, M.N);
        for (int k = 0; k < P.N; ++k) prod = prod * (mtx - P.xi(k) * I);
        return prod.is_zero();
    };
    rep.check(semisimple(g), "g acts semisimply with xi-power eigenvalues");
    rep.check(semisimple(A), "A acts semisimply with xi-power eigenvalues");
    return rep;
}

// The simple module V_{i,j}: x cyclic upwards, X lowering with the c_k.
inline DModule build_simple(int n, int m, int i, int j) {
    const Params P(n, m);
    if (i < 0 || i >= P.N || j < 0 || j >= P.N)
        throw PreconditionError("indices must satisfy 0 <= i,j < nm");
    const int r = r_of(n, m, i, j);
    DModule M;
    M.n = n;
    M.m = m;
    M.N = P.N;
    M.dim = r;
    M.label = {i, j};
    M.name = "V(" + std::to_string(i) + "," + std::to_string(j) + ")";
    M.act_g = CycMat(r, r, P.N);
    M.act_x = CycMat(r, r, P.N);
    M.act_X = CycMat(r, r, P.N);
    M.act_A = CycMat(r, r, P.N);
    for (int k = 0; k < r; ++k) {
        M.act_A.at(k, k) = P.xi(i - k);
        M.act_g.at(k, k) = P.xi(j - static_cast<long>(k) * m);
        if (k < r - 1)
            M.act_x.at(k + 1, k) = P.one();
        else
            M.act_x.at(0, r - 1) = P.one() - P.xi(static_cast<long>(j) * n);
        if (k > 0) M.act_X.at(k - 1, k) = sol_ck(P, i, j, k);
    }
    const Report rep = verify_dmodule(M);
    if (!rep.ok) {
        std::string msg = "simple module verification failed:";
        for (const auto& e : rep.entries)
            if (e.rfind("FAIL", 0) == 0) msg += " [" + e + "]";
        throw VerificationError(msg);
    }
    return M;
}

namespace modops {

// Column space of [vectors | act*vectors | ...] until stable: the submodule
// generated by the given columns.
inline CycMat closure(const DModule& M, const CycMat& seed) {
    CycMat basis = column_basis(seed);
    while (true) {
        CycMat bigger(M.dim, basis.cols() * 5);
        for (int c = 0; c < basis.cols(); ++c)
            for (int r = 0; r < M.dim; ++r) bigger.at(r, c) = basis.at(r, c);
        for (int kgen = 0; kgen < 4; ++kgen) {
            const CycMat img = M.gen(kgen) * basis;
            for (int c = 0; c < basis.cols(); ++c)
                for (int r = 0; r < M.dim; ++r)
                    bigger.at(r, (kgen + 1) * basis.cols() + c) = img.at(r, c);
        }
        CycMat next = column_basis(bigger);
        if (next.cols() == basis.cols()) return next;
        basis = std::move(next);
    }
}

// Express each column of vecs in the column space of basis; basis columns
// must be independent.
inline std::optional<CycMat> coords_in(const CycMat& basis, const CycMat& vecs) {
    CycMat out(basis.cols(), vecs.cols());
    for (int c = 0; c < vecs.cols(); ++c) {
        std::vector<Cyc> b;
        for (int r = 0; r < vecs.rows(); ++r) b.push_back(vecs.at(r, c));
        auto x = solve(basis, b);
        if (!x) return std::nullopt;
        // confirm exactly (solve returns some solution; basis independence makes it the expansion)
        for (int r = 0; r < basis.cols(); ++r) out.at(r, c) = (*x)[static_cast<std::size_t>(r)];
    }
    return out;
}

// Restriction of the action to an invariant column space.
inline DModule restrict_to(const DModule& M, const CycMat& basis) {
    DModule S;
    S.n = M.n;
    S.m = M.m;
    S.N = M.N;
    S.dim = basis.cols();
    auto restrict_gen = [&](const CycMat& act) {
        auto co = coords_in(basis, act * basis);
        if (!co) throw VerificationError("restriction to a non-invariant subspace");
        return *co;
    };
    S.act_g = restrict_gen(M.act_g);
    S.act_x = restrict_gen(M.act_x);
    S.act_X = restrict_gen(M.act_X);
    S.act_A = restrict_gen(M.act_A);
    return S;
}

// Quotient by an invariant column space: coordinates on a complement of the
// span, with the induced action.
inline DModule quotient_by(const DModule& M, const CycMat& basis) {
    const int d = M.dim, k = basis.cols();
    CycMat full(d, d + k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < d; ++r) full.at(r, c) = basis.at(r, c);
    for (int c = 0; c < d; ++c) full.at(c, k + c) = Cyc::one(M.N);
    CycMat work = full;
    std::vector<int> pivots = work.rref();
    std::vector<int> comp;  // identity columns completing the basis
    for (int p : pivots)
        if (p >= k) comp.push_back(p - k);
    CycMat frame(d, d);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < d; ++r) frame.at(r, c) = basis.at(r, c);
    for (std::size_t t = 0; t < comp.size(); ++t) frame.at(comp[t], k + static_cast<int>(t)) = Cyc::one(M.N);
    const CycMat frame_inv = inverse(frame);
    auto quotient_gen = [&](const CycMat& act) {
        const CycMat conj = frame_inv * (act * frame);
        CycMat out(d - k, d - k, M.N);
        for (int r = 0; r < d - k; ++r)
            for (int c = 0; c < d - k; ++c) out.at(r, c) = conj.at(k + r, k + c);
        return out;
    };
    DModule Q;
    Q.n = M.n;
    Q.m = M.m;
    Q.N = M.N;
    Q.dim = d - k;
    Q.act_g = quotient_gen(M.act_g);
    Q.act_x = quotient_gen(M.act_x);
    Q.act_X = quotient_gen(M.act_X);
    Q.act_A = quotient_gen(M.act_A);
    return Q;
}

// Basis vectors of each joint (A, g) eigenspace, keyed by exponent pair.
inline std::vector<std::tuple<int, int, CycMat>> joint_eigenspaces(const DModule& M) {
    const Params P(M.n, M.m);
    std::vector<std::tuple<int, int, CycMat>> out;
    const CycMat I = CycMat::identity(M.dim, M.N);
    for (int p = 0; p < P.N; ++p) {
        const CycMat Ap = M.act_A - P.xi(p) * I;
        if (rank(Ap) == M.dim) continue;
        for (int q = 0; q < P.N; ++q) {
            const CycMat gq = M.act_g - P.xi(q) * I;
            CycMat stacked(2 * M.dim, M.dim);
            for (int r = 0; r < M.dim; ++r)
                for (int c = 0; c < M.dim; ++c) {
                    stacked.at(r, c) = Ap.at(r, c);
                    stacked.at(M.dim + r, c) = gq.at(r, c);
                }
            CycMat ker = kernel(stacked);
            if (ker.cols() > 0) out.emplace_back(p, q, std::move(ker));
        }
    }
    return out;
}

// Dimension of the space of intertwiners M1 -> M2 and a basis of them.
inline std::vector<CycMat> intertwiners(const DModule& M1, const DModule& M2) {
    const int d1 = M1.dim, d2 = M2.dim;
    CycMat sys(4 * d1 * d2, d1 * d2);
    // unknown T: d2 x d1, entry (r, c) at index r*d1 + c; equations T act1 = act2 T
    for (int kgen = 0; kgen < 4; ++kgen) {
        const CycMat& a1 = M1.gen(kgen);
        const CycMat& a2 = M2.gen(kgen);
        const int base = kgen * d1 * d2;
        for (int r = 0; r < d2; ++r)
            for (int c = 0; c < d1; ++c) {
                for (int t = 0; t < d1; ++t)
                    sys.at(base + r * d1 + c, r * d1 + t) += a1.at(t, c);
                for (int t = 0; t < d2; ++t)
                    sys.at(base + r * d1 + c, t * d1 + c) -= a2.at(r, t);
            }
    }
    CycMat ker = kernel(sys);
    std::vector<CycMat> out;
    for (int v = 0; v < ker.cols(); ++v) {
        CycMat T(d2, d1);
        for (int r = 0; r < d2; ++r)
            for (int c = 0; c < d1; ++c) T.at(r, c) = ker.at(r * d1 + c, v);
        out.push_back(std::move(T));
    }
    return out;
}

}  // namespace modops

// Invertible intertwiner if one exists.
inline std::optional<CycMat> iso_test(const DModule& M1, const DModule& M2) {
    if (M1.dim != M2.dim || M1.n != M2.n || M1.m != M2.m) return std::nullopt;
    auto basis = modops::intertwiners(M1, M2);
    for (const auto& T : basis)
        if (rank(T) == M1.dim) return T;
    // small search over combinations in case no basis member is invertible
    if (basis.size() > 1) {
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                const CycMat T = basis[a] + basis[b];
                if (rank(T) == M1.dim) return T;
            }
    }
    return std::nullopt;
}

// Simplicity by eigenvector closures, with a commutant fallback when a joint
// eigenvalue occurs with multiplicity.
inline bool is_simple(const DModule& M) {
    if (M.dim == 0) return false;
    auto spaces = modops::joint_eigenspaces(M);
    bool multiplicity_free = true;
    for (const auto& [p, q, ker] : spaces)
        if (ker.cols() > 1) multiplicity_free = false;
    if (!multiplicity_free) {
        if (modops::intertwiners(M, M).size() != 1) return false;
    }
    for (const auto& [p, q, ker] : spaces)
        for (int c = 0; c < ker.cols(); ++c) {
            CycMat v(M.dim, 1);
            for (int r = 0; r < M.dim; ++r) v.at(r, 0) = ker.at(r, c);
            if (modops::closure(M, v).cols() != M.dim) return false;
        }
    return true;
}

inline DModule direct_sum(const DModule& A, const DModule& B) {
    DModule S;
    S.n = A.n;
    S.m = A.m;
    S.N = A.N;
    S.dim = A.dim + B.dim;
    auto blocks = [&](const CycMat& a, const CycMat& b) {
        CycMat out(S.dim, S.dim, S.N);
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) out.at(A.dim + r, A.dim + c) = b.at(r, c);
        return out;
    };
    S.act_g = blocks(A.act_g, B.act_g);
    S.act_x = blocks(A.act_x, B.act_x);
    S.act_X = blocks(A.act_X, B.act_X);
    S.act_A = blocks(A.act_A, B.act_A);
    return S;
}

// Sum of all simple submodules, with its basis in the ambient coordinates.
// Candidate generators are the joint (A, g) eigenvectors inside ker X.
inline std::pair<DModule, CycMat> socle(const DModule& M) {
    const CycMat kerX = kernel(M.act_X);
    std::vector<CycMat> simple_bases;
    auto spaces = modops::joint_eigenspaces(M);
    for (const auto& [p, q, eig] : spaces) {
        // eigenvectors also in ker X: solve eig*y = kerX*z via the kernel of [eig | -kerX]
        CycMat comb(M.dim, eig.cols() + kerX.cols());
        for (int r = 0; r < M.dim; ++r) {
            for (int c = 0; c < eig.cols(); ++c) comb.at(r, c) = eig.at(r, c);
            for (int c = 0; c < kerX.cols(); ++c) comb.at(r, eig.cols() + c) = -kerX.at(r, c);
        }
        CycMat nullsp = kernel(comb);
        for (int v = 0; v < nullsp.cols(); ++v) {
            CycMat w(M.dim, 1);
            bool nonzero = false;
            for (int r = 0; r < M.dim; ++r) {
                Cyc acc = Cyc::zero(M.N);
                for (int c = 0; c < eig.cols(); ++c) acc += eig.at(r, c) * nullsp.at(c, v);
                w.at(r, 0) = acc;
                nonzero = nonzero || !acc.is_zero();
            }
            if (!nonzero) continue;
            CycMat cl = modops::closure(M, w);
            if (is_simple(modops::restrict_to(M, cl))) simple_bases.push_back(std::move(cl));
        }
    }
    if (simple_bases.empty()) return {DModule{}, CycMat(M.dim, 0)};
    int total = 0;
    for (const auto& b : simple_bases) total += b.cols();
    CycMat all(M.dim, total);
    int at = 0;
    for (const auto& b : simple_bases) {
        for (int c = 0; c < b.cols(); ++c)
            for (int r = 0; r < M.dim; ++r) all.at(r, at + c) = b.at(r, c);
        at += b.cols();
    }
    const CycMat basis = column_basis(all);
    return {modops::restrict_to(M, basis), basis};
}

struct CompSeries {
    std::vector<CycMat> chain;                      // bases of M_0 c M_1 c ...
    std::vector<std::pair<int, int>> factors;       // labels of the simple quotients
};

// Identify a simple module among the V_{i,j}.
inline std::optional<std::pair<int, int>> identify_simple(const DModule& S) {
    const Params P(S.n, S.m);
    for (int i = 0; i < P.N; ++i)
        for (int j = 0; j < P.N; ++j) {
            if (r_of(S.n, S.m, i, j) != S.dim) continue;
            const DModule V = build_simple(S.n, S.m, i, j);
            if (iso_test(V, S)) return std::make_pair(i, j);
        }
    return std::nullopt;
}

// Peel simple submodules from the socle side. When the socle of an
// intermediate quotient has several summands, they are taken in the order of
// their spectral distance (label minus first-factor label, mod nm), which
// follows the chain u-side-before-2-sector of the projective covers.
inline CompSeries composition_series(const DModule& M) {
    CompSeries cs;
    DModule cur = M;
    // lift[r][c]: basis of the current quotient expressed in ambient coordinates
    CycMat lift = CycMat::identity(M.dim, M.N);
    CycMat accum(M.dim, 0);
    while (cur.dim > 0) {
        std::vector<std::pair<std::pair<int, int>, CycMat>> candidates;
        auto spaces = modops::joint_eigenspaces(cur);
        for (const auto& [p, q, eig] : spaces)
            for (int c = 0; c < eig.cols(); ++c) {
                CycMat v(cur.dim, 1);
                for (int r = 0; r < cur.dim; ++r) v.at(r, 0) = eig.at(r, c);
                CycMat cl = modops::closure(cur, v);
                const DModule S = modops::restrict_to(cur, cl);
                if (!is_simple(S)) continue;
                auto label = identify_simple(S);
                if (!label) throw VerificationError("composition factor is not among the V_{i,j}");
                bool dup = false;
                for (const auto& [lb, b] : candidates) dup = dup || (lb == *label && b.cols() == cl.cols());
                if (!dup) candidates.emplace_back(*label, std::move(cl));
            }
        if (candidates.empty()) throw VerificationError("no simple submodule found");
        auto key = [&](const std::pair<int, int>& lb) {
            if (cs.factors.empty()) return std::make_pair(lb.first, lb.second);
            const int N = M.N;
            return std::make_pair((((lb.first - cs.factors[0].first) % N) + N) % N,
                                  (((lb.second - cs.factors[0].second) % N) + N) % N);
        };
        std::sort(candidates.begin(), candidates.end(),
                  [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
        const CycMat found = candidates.front().second;
        cs.factors.push_back(candidates.front().first);
        // ambient basis of the new chain member: previous chain + lift(found)
        const CycMat lifted = lift * found;
        CycMat merged(M.dim, accum.cols() + lifted.cols());
        for (int c = 0; c < accum.cols(); ++c)
            for (int r = 0; r < M.dim; ++r) merged.at(r, c) = accum.at(r, c);
        for (int c = 0; c < lifted.cols(); ++c)
            for (int r = 0; r < M.dim; ++r) merged.at(r, accum.cols() + c) = lifted.at(r, c);
        accum = column_basis(merged);
        cs.chain.push_back(accum);
        // pass to the quotient
        const int k = found.cols();
        DModule quo = modops::quotient_by(cur, found);
        // update the lift: complement columns used by quotient_by
        CycMat full(cur.dim, cur.dim + k);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < cur.dim; ++r) full.at(r, c) = found.at(r, c);
        for (int c = 0; c < cur.dim; ++c) full.at(c, k + c) = Cyc::one(M.N);
        CycMat work = full;
        std::vector<int> pivots = work.rref();
        CycMat newlift(M.dim, cur.dim - k);
        int at = 0;
        for (int p : pivots)
            if (p >= k) {
                for (int r = 0; r < M.dim; ++r) newlift.at(r, at) = lift.at(r, p - k);
                ++at;
            }
        lift = std::move(newlift);
        cur = std::move(quo);
    }
    return cs;
}

// The projective cover M_{i,j} of a short simple (r < n): two x-chains of
// length n glued by the X action. Basis order u1_0..u1_{n-r-1}, v1_0..v1_{r-1},
// u2_0..u2_{n-r-1}, v2_0..v2_{r-1}. The X action is generated from the chain
// heads by the relation xX = w Xx + (1 - Ug); the gluing scalar alpha is the
// unique value making the xA relation hold.
inline DModule build_projective(int n, int m, int i, int j) {
    const Params P(n, m);
    if (j % m != 0) throw PreconditionError("projective M_{i,j} requires m | j");
    const int r = r_of(n, m, i, j);
    if (r == n) throw PreconditionError("r = n: the simple module is already projective");
    const int d = 2 * n;
    const int u1 = 0, v1 = n - r, u2 = n, v2 = n + (n - r);

    DModule M;
    M.n = n;
    M.m = m;
    M.N = P.N;
    M.dim = d;
    M.label = {i, j};
    M.name = "M(" + std::to_string(i) + "," + std::to_string(j) + ")";
    M.act_g = CycMat(d, d, P.N);
    M.act_x = CycMat(d, d, P.N);
    M.act_A = CycMat(d, d, P.N);

    const int jm = j / m;
    for (int k = 0; k <= n - r - 1; ++k) {
        M.act_g.at(u1 + k, u1 + k) = P.omega(jm - r - k);
        M.act_g.at(u2 + k, u2 + k) = P.omega(jm - r - k);
        M.act_A.at(u1 + k, u1 + k) = P.xi(n + i - r - k);
        M.act_A.at(u2 + k, u2 + k) = P.xi(i - r - k);
        M.act_A.at(u1 + k, u2 + k) = P.xi(i - r - k);
    }
    for (int l = 0; l <= r - 1; ++l) {
        M.act_g.at(v1 + l, v1 + l) = P.omega(jm - l);
        M.act_g.at(v2 + l, v2 + l) = P.omega(jm - l);
        M.act_A.at(v1 + l, v1 + l) = P.xi(i - l);
        M.act_A.at(v2 + l, v2 + l) = P.xi(i - l);
    }
    // x chains: u1 -> v1 -> 0 and v2 -> u2 -> 0
    for (int k = 0; k + 1 <= n - r - 1; ++k) {
        M.act_x.at(u1 + k + 1, u1 + k) = P.one();
        M.act_x.at(u2 + k + 1, u2 + k) = P.one();
    }
    M.act_x.at(v1 + 0, u1 + (n - r - 1)) = P.one();
    for (int l = 0; l + 1 <= r - 1; ++l) {
        M.act_x.at(v1 + l + 1, v1 + l) = P.one();
        M.act_x.at(v2 + l + 1, v2 + l) = P.one();
    }
    M.act_x.at(u2 + 0, v2 + (r - 1)) = P.one();

    const CycMat Ug = M.act_U() * M.act_g;
    const CycMat I = CycMat::identity(d, P.N);
    auto build_X = [&](const Cyc& alpha) {
        CycMat X(d, d, P.N);
        // chain heads
        // X u1_0 = 0; X v2_0 = alpha u1_{n-r-1}
        X.at(u1 + (n - r - 1), v2 + 0) = alpha;
        // walk each chain: X(x w) = w^{-1} (x X(w) - w + Ug w)
        auto step = [&](int cur, int nxt) {
            std::vector<Cyc> col(static_cast<std::size_t>(d), Cyc::zero(P.N));
            for (int t = 0; t < d; ++t) {
                Cyc acc = Cyc::zero(P.N);
                for (int s = 0; s < d; ++s) acc += M.act_x.at(t, s) * X.at(s, cur);
                acc += Ug.at(t, cur);
                if (t == cur) acc -= P.one();
                col[static_cast<std::size_t>(t)] = P.omega(-1) * acc;
            }
            for (int t = 0; t < d; ++t) X.at(t, nxt) = col[static_cast<std::size_t>(t)];
        };
        for (int k = 0; k + 1 <= n - r - 1; ++k) step(u1 + k, u1 + k + 1);
        step(u1 + (n - r - 1), v1 + 0);
        for (int l = 0; l + 1 <= r - 1; ++l) step(v1 + l, v1 + l + 1);
        for (int l = 0; l + 1 <= r - 1; ++l) step(v2 + l, v2 + l + 1);
        step(v2 + (r - 1), u2 + 0);
        for (int k = 0; k + 1 <= n - r - 1; ++k) step(u2 + k, u2 + k + 1);
        return X;
    };
    auto xa_residual = [&](const CycMat& X) {
        return M.act_x * M.act_A - P.xi() * (M.act_A * M.act_x) -
               gamma_nk(P, 1) * (X.pow(n - 1) * ((I - P.omega(n - 1) * Ug) * M.act_A));
    };
    // the residual is affine in alpha: one X-application leaves the 2-sector at
    // most once, so no alpha^2 terms arise
    const CycMat X0 = build_X(P.zero());
    const CycMat X1 = build_X(P.one());
    const CycMat R0 = xa_residual(X0);
    const CycMat R1 = xa_residual(X1);
    std::optional<Cyc> alpha;
    for (int rr = 0; rr < d; ++rr)
        for (int cc = 0; cc < d; ++cc) {
            const Cyc diff = R1.at(rr, cc) - R0.at(rr, cc);
            if (diff.is_zero()) continue;
            const Cyc cand = -R0.at(rr, cc) / diff;
            if (alpha && *alpha != cand)
                throw VerificationError("inconsistent gluing scalar for M_{i,j}");
            alpha = cand;
        }
    if (!alpha) throw VerificationError("gluing scalar for M_{i,j} is unconstrained");
    M.act_X = build_X(*alpha);

    const Report rep = verify_dmodule(M);
    if (!rep.ok) {
        std::string msg = "projective module verification failed:";
        for (const auto& e : rep.entries)
            if (e.rfind("FAIL", 0) == 0) msg += " [" + e + "]";
        throw VerificationError(msg);
    }
    return M;
}

// e_{i,j} = (1/(nm)^2) sum_{r,s} xi^{-ir-js} A^r g^s, a complete family of
// orthogonal idempotents of D; A^r g^s is the basis element g^s # A^r. The
// group generated by A and g has order (nm)^2, which fixes the normalizer.
inline SVec central_idempotent(const DoubleCtx& ctx, int i, int j) {
    const Params P(ctx.n, ctx.m);
    std::map<int, Cyc> acc;
    const Cyc inv_nm = Cyc::rational(Rational(1, static_cast<long>(P.N) * P.N), P.N);
    for (int rr = 0; rr < P.N; ++rr)
        for (int ss = 0; ss < P.N; ++ss)
            sv::add_into(acc,
                         sv::unit(ctx.didx(ctx.r_mono(0, ss), ctx.h_mono(0, rr))),
                         inv_nm * P.xi(-(static_cast<long>(i) * rr + static_cast<long>(j) * ss)));
    return sv::from_map(std::move(acc));
}

// e^{(n)}_{i,j} = lambda_n X^{n-1} x^{n-1} e_{i,j} with
// lambda_n = 1/(c_1 ... c_{n-1}); defined for full-size simples (r = n).
inline SVec primitive_idempotent(const DoubleCtx& ctx, int i, int j) {
    const Params P(ctx.n, ctx.m);
    if (r_of(ctx.n, ctx.m, i, j) != ctx.n)
        throw PreconditionError("e^{(n)}_{i,j} requires r = n");
    Cyc prod = P.one();
    for (int k = 1; k <= ctx.n - 1; ++k) {
        const Cyc ck = sol_ck(P, i, j, k);
        if (ck.is_zero()) throw VerificationError("vanishing c_k for a full-size simple");
        prod *= ck;
    }
    const SVec e = central_idempotent(ctx, i, j);
    const SVec Xx = ctx.D.mul(ctx.D.power(ctx.X(), ctx.n - 1), ctx.D.power(ctx.x(), ctx.n - 1));
    return sv::scale(ctx.D.mul(Xx, e), prod.inv());
}

// The left ideal D e as a module, with its action matrices.
inline DModule left_ideal_module(const DoubleCtx& ctx, const SVec& e) {
    const FDHopf& D = ctx.D;
    CycMat span(D.dim, D.dim);
    for (int b = 0; b < D.dim; ++b) {
        const SVec v = D.mul(sv::unit(b), e);
        for (const auto& [k, c] : v) span.at(k, b) = c;
    }
    const CycMat basis = column_basis(span);
    DModule M;
    M.n = ctx.n;
    M.m = ctx.m;
    M.N = ctx.N;
    M.dim = basis.cols();
    auto act_of = [&](const SVec& gen) {
        CycMat img(D.dim, basis.cols());
        for (int c = 0; c < basis.cols(); ++c) {
            SVec col;
            for (int r = 0; r < D.dim; ++r)
                if (!basis.at(r, c).is_zero()) col.emplace_back(r, basis.at(r, c));
            const SVec out = D.mul(gen, col);
            for (const auto& [k, cc] : out) img.at(k, c) = cc;
        }
        auto co = modops::coords_in(basis, img);
        if (!co) throw VerificationError("left ideal is not invariant");
        return *co;
    };
    M.act_g = act_of(ctx.g());
    M.act_x = act_of(ctx.x());
    M.act_X = act_of(ctx.X());
    M.act_A = act_of(ctx.A());
    return M;
}

// Oriented module graph: one node per basis vector, an edge v_l -> v_k for a
// nonzero coefficient of v_k in x.v_l or X.v_l, tagged by the acting letter.
inline std::string dot_export(const DModule& M) {
    std::ostringstream os;
    os << "digraph module {\n";
    os << "  rankdir=LR;\n";
    for (int k = 0; k < M.dim; ++k) os << "  v" << k << " [label=\"v" << k << "\"];\n";
    auto edges = [&](const CycMat& act, const char* action, const char* color) {
        for (int l = 0; l < M.dim; ++l)
            for (int k = 0; k < M.dim; ++k)
                if (!act.at(k, l).is_zero())
                    os << "  v" << l << " -> v" << k << " [action=\"" << action
                       << "\", color=" << color << "];\n";
    };
    edges(M.act_x, "x", "black");
    edges(M.act_X, "X", "blue");
    os << "}\n";
    return os.str();
}

}  // namespace radford
