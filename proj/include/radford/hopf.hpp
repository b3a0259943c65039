#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radford/matrix.hpp"
#include "radford/qnum.hpp"

namespace radford {

// Sparse vector over an indexed basis: sorted (index, nonzero coeff) pairs.
using SVec = std::vector<std::pair<int, Cyc>>;

namespace sv {

inline SVec from_map(std::map<int, Cyc>&& acc) {
    SVec out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.emplace_back(k, std::move(v));
    return out;
}

inline void add_into(std::map<int, Cyc>& acc, const SVec& v, const Cyc& scale) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : v) {
        auto it = acc.find(k);
        if (it == acc.end())
            acc.emplace(k, scale * c);
        else
            it->second += scale * c;
    }
}

inline SVec add(const SVec& a, const SVec& b) {
    std::map<int, Cyc> acc;
    add_into(acc, a, Cyc::integer(1));
    add_into(acc, b, Cyc::integer(1));
    return from_map(std::move(acc));
}

inline SVec sub(const SVec& a, const SVec& b) {
    std::map<int, Cyc> acc;
    add_into(acc, a, Cyc::integer(1));
    add_into(acc, b, Cyc::integer(-1));
    return from_map(std::move(acc));
}

inline SVec scale(const SVec& a, const Cyc& s) {
    if (s.is_zero()) return {};
    SVec out = a;
    for (auto& [k, c] : out) c = s * c;
    return out;
}

inline SVec unit(int index, const Cyc& c = Cyc::integer(1)) {
    if (c.is_zero()) return {};
    return {{index, c}};
}

inline bool equal(const SVec& a, const SVec& b) {
    const SVec d = sub(a, b);
    return d.empty();
}

inline std::string str(const SVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*e" + std::to_string(k);
    }
    return s;
}

}  // namespace sv

// Finite-dimensional Hopf algebra given by structure constants on a labeled
// basis. mult[i*dim+j] expands e_i e_j; comult[i] expands Delta(e_i) with
// tensor-square indices p*dim+q for e_p (x) e_q.
struct FDHopf {
    int dim = 0;
    int field_order = 1;
    std::string name;
    std::vector<std::vector<int>> labels;
    std::vector<SVec> mult;
    std::vector<SVec> comult;
    std::vector<Cyc> counit;
    SVec unit;
    CycMat antipode;  // column j expands S(e_j)

    const SVec& basis_product(int i, int j) const {
        return mult[static_cast<std::size_t>(i) * dim + j];
    }

    SVec mul(const SVec& a, const SVec& b) const {
        std::map<int, Cyc> acc;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) sv::add_into(acc, basis_product(i, j), ci * cj);
        return sv::from_map(std::move(acc));
    }

    SVec power(const SVec& a, long e) const {
        SVec acc = unit;
        for (long t = 0; t < e; ++t) acc = mul(acc, a);
        return acc;
    }

    SVec delta(const SVec& a) const {
        std::map<int, Cyc> acc;
        for (const auto& [i, ci] : a) sv::add_into(acc, comult[static_cast<std::size_t>(i)], ci);
        return sv::from_map(std::move(acc));
    }

    // Product in the tensor square, indices p*dim+q.
    SVec mul2(const SVec& a, const SVec& b) const {
        std::map<int, Cyc> acc;
        for (const auto& [t1, c1] : a) {
            const int p = t1 / dim, q = t1 % dim;
            for (const auto& [t2, c2] : b) {
                const int r = t2 / dim, s = t2 % dim;
                const Cyc c = c1 * c2;
                for (const auto& [u, cu] : basis_product(p, r))
                    for (const auto& [v, cv] : basis_product(q, s))
                        sv::add_into(acc, sv::unit(u * dim + v), c * cu * cv);
            }
        }
        return sv::from_map(std::move(acc));
    }

    Cyc eps(const SVec& a) const {
        Cyc e = Cyc::zero(field_order);
        for (const auto& [i, c] : a) e += c * counit[static_cast<std::size_t>(i)];
        return e;
    }

    SVec antipode_of(const SVec& a) const { return apply_matrix(antipode, a); }

    static SVec apply_matrix(const CycMat& m, const SVec& a) {
        std::map<int, Cyc> acc;
        for (const auto& [j, c] : a)
            for (int i = 0; i < m.rows(); ++i) {
                const Cyc& mij = m.at(i, j);
                if (!mij.is_zero()) sv::add_into(acc, sv::unit(i), c * mij);
            }
        return sv::from_map(std::move(acc));
    }

    // Delta^2 = (Delta (x) id) Delta, as triples (p, q, r) with coefficients.
    std::vector<std::tuple<int, int, int, Cyc>> delta2(int i) const {
        std::vector<std::tuple<int, int, int, Cyc>> out;
        for (const auto& [t, c] : comult[static_cast<std::size_t>(i)]) {
            const int p = t / dim, q = t % dim;
            for (const auto& [t2, c2] : comult[static_cast<std::size_t>(p)])
                out.emplace_back(t2 / dim, t2 % dim, q, c * c2);
        }
        return out;
    }
};

struct Report {
    std::vector<std::string> entries;
    bool ok = true;

    void check(bool pass, const std::string& what) {
        entries.push_back((pass ? "pass: " : "FAIL: ") + what);
        if (!pass) ok = false;
    }
};

// Full exact Hopf-axiom suite. Associativity and the bialgebra law are
// quadratic/cubic in dim; run on the small algebras, or sampled via max_pairs.
inline Report verify_hopf(const FDHopf& H, long max_triples = -1, unsigned seed = 1) {
    Report rep;
    const int d = H.dim;
    const Cyc one = Cyc::one(H.field_order);

    bool pass = true;
    for (int i = 0; i < d && pass; ++i) {
        pass = sv::equal(H.mul(H.unit, sv::unit(i)), sv::unit(i)) &&
               sv::equal(H.mul(sv::unit(i), H.unit), sv::unit(i));
    }
    rep.check(pass, "unit laws");

    pass = true;
    long total = static_cast<long>(d) * d * d;
    std::mt19937_64 rng(seed);
    if (max_triples < 0 || total <= max_triples) {
        for (int i = 0; i < d && pass; ++i)
            for (int j = 0; j < d && pass; ++j) {
                const SVec ij = H.basis_product(i, j);
                for (int k = 0; k < d && pass; ++k)
                    pass = sv::equal(H.mul(ij, sv::unit(k)), H.mul(sv::unit(i), H.basis_product(j, k)));
            }
        rep.check(pass, "associativity (all triples)");
    } else {
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (long t = 0; t < max_triples && pass; ++t) {
            const int i = pick(rng), j = pick(rng), k = pick(rng);
            pass = sv::equal(H.mul(H.basis_product(i, j), sv::unit(k)),
                             H.mul(sv::unit(i), H.basis_product(j, k)));
        }
        rep.check(pass, "associativity (sampled)");
    }

    pass = true;
    for (int i = 0; i < d && pass; ++i) {
        // (Delta (x) id) Delta == (id (x) Delta) Delta, compared through triples
        std::map<long long, Cyc> lhs, rhs;
        for (const auto& [p, q, r, c] : H.delta2(i)) {
            auto key = (static_cast<long long>(p) * d + q) * d + r;
            auto it = lhs.find(key);
            if (it == lhs.end()) lhs.emplace(key, c); else it->second += c;
        }
        for (const auto& [t, c] : H.comult[static_cast<std::size_t>(i)]) {
            const int p = t / d, q = t % d;
            for (const auto& [t2, c2] : H.comult[static_cast<std::size_t>(q)]) {
                auto key = (static_cast<long long>(p) * d + t2 / d) * d + t2 % d;
                auto it = rhs.find(key);
                if (it == rhs.end()) rhs.emplace(key, c * c2); else it->second += c * c2;
            }
        }
        for (auto& [k, v] : rhs) {
            auto it = lhs.find(k);
            if (it == lhs.end()) lhs.emplace(k, -v); else it->second -= v;
        }
        for (auto& [k, v] : lhs) pass = pass && v.is_zero();
    }
    rep.check(pass, "coassociativity");

    pass = true;
    for (int i = 0; i < d && pass; ++i) {
        std::map<int, Cyc> accl, accr;
        for (const auto& [t, c] : H.comult[static_cast<std::size_t>(i)]) {
            const int p = t / d, q = t % d;
            sv::add_into(accl, sv::unit(q), c * H.counit[static_cast<std::size_t>(p)]);
            sv::add_into(accr, sv::unit(p), c * H.counit[static_cast<std::size_t>(q)]);
        }
        pass = sv::equal(sv::from_map(std::move(accl)), sv::unit(i)) &&
               sv::equal(sv::from_map(std::move(accr)), sv::unit(i));
    }
    rep.check(pass, "counit laws");

    pass = sv::equal(H.delta(H.unit), H.mul2(H.delta(H.unit), H.delta(H.unit))) &&
           H.eps(H.unit) == one;
    for (int i = 0; i < d && pass; ++i)
        for (int j = 0; j < d && pass; ++j) {
            const SVec prod = H.basis_product(i, j);
            pass = sv::equal(H.delta(prod),
                             H.mul2(H.comult[static_cast<std::size_t>(i)],
                                    H.comult[static_cast<std::size_t>(j)])) &&
                   H.eps(prod) == H.counit[static_cast<std::size_t>(i)] *
                                      H.counit[static_cast<std::size_t>(j)];
        }
    rep.check(pass, "bialgebra compatibility");

    pass = true;
    for (int i = 0; i < d && pass; ++i) {
        std::map<int, Cyc> accl, accr;
        for (const auto& [t, c] : H.comult[static_cast<std::size_t>(i)]) {
            const int p = t / d, q = t % d;
            sv::add_into(accl, H.mul(H.antipode_of(sv::unit(p)), sv::unit(q)), c);
            sv::add_into(accr, H.mul(sv::unit(p), H.antipode_of(sv::unit(q))), c);
        }
        const SVec want = sv::scale(H.unit, H.counit[static_cast<std::size_t>(i)]);
        pass = sv::equal(sv::from_map(std::move(accl)), want) &&
               sv::equal(sv::from_map(std::move(accr)), want);
    }
    rep.check(pass, "antipode axiom");

    return rep;
}

// Solve m(S (x) id) Delta = u eps for S as a linear system. The antipode is the
// convolution inverse of the identity, so the solution is unique; the right
// axiom is then verified separately by verify_hopf.
inline CycMat solve_antipode(const FDHopf& H) {
    const int d = H.dim;
    const int n_unknown = d * d;  // S_{c,p}: entry (c) of column p
    CycMat A(d * d, n_unknown, H.field_order);
    std::vector<Cyc> b(static_cast<std::size_t>(d) * d, Cyc::zero(H.field_order));
    for (int i = 0; i < d; ++i) {
        for (const auto& [t, coef] : H.comult[static_cast<std::size_t>(i)]) {
            const int p = t / d, q = t % d;
            for (int c = 0; c < d; ++c)
                for (const auto& [e, me] : H.basis_product(c, q))
                    A.at(i * d + e, p * d + c) += coef * me;
        }
        for (const auto& [u, cu] : H.unit)
            b[static_cast<std::size_t>(i) * d + u] += H.counit[static_cast<std::size_t>(i)] * cu;
    }
    auto x = solve(A, b);
    if (!x) throw VerificationError("antipode system has no solution");
    CycMat S(d, d, H.field_order);
    for (int p = 0; p < d; ++p)
        for (int c = 0; c < d; ++c) S.at(c, p) = (*x)[static_cast<std::size_t>(p) * d + c];
    return S;
}

}  // namespace radford
