#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "radford/nichols.hpp"

namespace radford {

// Everything in this header is the n = 2 story: xi is a primitive 2m-th root
// of unity, xi^m = -1, and the transported braidings have rank at most 2.

// Generalized Dynkin diagram of the rank-2 diagonal braiding attached to
// V_{i,j}: vertices q11 = xi^m = -1 and q22 = xi^{ij}, edge xi^{-j-im}.
struct Dynkin2 {
    int m = 0;
    int q11_exp = 0, edge_exp = 0, q22_exp = 0;  // exponents of xi, mod 2m
    Cyc q11, edge, q22;
    bool connected = false;
};

inline Dynkin2 dynkin(int m, int i, int j) {
    const Params P(2, m);
    if (i < 0 || i >= P.N || j < 0 || j >= P.N)
        throw PreconditionError("indices must satisfy 0 <= i,j < 2m");
    Dynkin2 D;
    D.m = m;
    D.q11_exp = m;
    D.edge_exp = P.modN(-static_cast<long>(j) - static_cast<long>(i) * m);
    D.q22_exp = P.modN(static_cast<long>(i) * j);
    D.q11 = P.xi(m);
    D.edge = P.xi(D.edge_exp);
    D.q22 = P.xi(D.q22_exp);
    D.connected = !D.edge.is_one();
    return D;
}

// Disconnected-diagram rule: when the edge label is 1 the braiding is a sum of
// two rank-one pieces; finite-dimensional iff n does not divide i*(j/m). An
// edge label -1 admits no Heckenberger diagram (a vertex would carry 1).
inline std::optional<bool> rank1_finite_general(int n, int m, int i, int j) {
    const Params P(n, m);
    const int edge = P.modN(-static_cast<long>(j) - static_cast<long>(i) * m);
    if (edge != 0) return std::nullopt;
    // xi^{-j-im} = 1 forces m | j
    if (j % m != 0) throw VerificationError("edge = 1 but m does not divide j");
    return (static_cast<long>(i) * (j / m)) % n != 0;
}

inline std::optional<bool> rank1_finite(int m, int i, int j) {
    const Dynkin2 D = dynkin(m, i, j);
    if (D.edge.is_one()) return rank1_finite_general(2, m, i, j);
    if (D.edge == Cyc::integer(-1)) return false;
    return std::nullopt;
}

// One row family of the rank-2 match table: congruence forms for (i, j) over
// the parameters (m1, m2, a, b) together with gcd and parity conditions.
struct HeckRow {
    int row_id = 0;
    std::vector<std::pair<int, int>> kl;  // Heckenberger indices covered
    int dual_row = 0;                     // row matched by (1-i, m-j)
};

struct HeckMatch {
    HeckRow row;
    int m1 = 0, m2 = 0, a = 0, b = 0;
    int form = 0;  // which displayed (i,j) form of the row matched
};

namespace heck {

inline const std::vector<HeckRow>& rows() {
    static const std::vector<HeckRow> table = {
        {1, {{2, 1}}, 2},           {2, {{2, 2}}, 1},
        {3, {{4, 1}, {4, 2}}, 3},   {4, {{6, 1}, {6, 2}}, 4},
        {5, {{7, 2}, {7, 3}}, 6},   {6, {{7, 4}, {7, 5}}, 5},
        {7, {{9, 2}}, 8},           {8, {{9, 3}}, 7},
        {9, {{11, 2}}, 10},         {10, {{11, 3}}, 9},
        {11, {{12, 3}}, 12},        {12, {{12, 4}}, 11},
        {13, {{13, 1}}, 14},        {14, {{13, 2}}, 13},
        {15, {{14, 1}, {14, 2}}, 16}, {16, {{14, 3}, {14, 4}}, 15},
        {17, {{15, 3}}, 18},        {18, {{15, 4}}, 17},
    };
    return table;
}

inline bool odd(int v) { return ((v % 2) + 2) % 2 == 1; }
inline bool even(int v) { return !odd(v); }

}  // namespace heck

// Search the table rows in order over all factorizations m = m1 m2 and all
// residues a, b mod 2m; the first matching row wins.
inline std::optional<HeckMatch> heck_match(int m, int i, int j) {
    const int M = 2 * m;
    auto cong = [&](long v, long w) { return ((v - w) % M + M) % M == 0; };

    for (const HeckRow& row : heck::rows()) {
        for (int m1 = 1; m1 <= m; ++m1) {
            if (m % m1 != 0) continue;
            const int m2 = m / m1;
            // row-specific shape of m
            switch (row.row_id) {
                case 1: case 2: case 3:
                    if (m1 == 1) continue;
                    break;
                case 4: if (m1 != 3) continue; break;
                case 5: case 6: if (m1 != 6) continue; break;
                case 7: case 8: if (m1 != 9) continue; break;
                case 9: case 10: if (m1 != 4) continue; break;
                case 11: case 12: if (m1 != 12) continue; break;
                case 13: case 14: if (m1 != 5) continue; break;
                case 15: case 16: if (m1 != 10) continue; break;
                case 17: case 18: if (m1 != 15) continue; break;
                default: break;
            }
            for (int a = 0; a < M; ++a)
                for (int b = 0; b < M; ++b) {
                    bool ok = false;
                    int form = 1;
                    switch (row.row_id) {
                        case 1:
                            ok = cong(i, 1 - static_cast<long>(m1) * a) &&
                                 cong(j, static_cast<long>(m2) * (m1 - b)) &&
                                 std::gcd(m1, b) == 1 && heck::odd(a) && heck::odd(b);
                            break;
                        case 2:
                            ok = cong(i, static_cast<long>(m1) * a) &&
                                 cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(m1, b) == 1 && heck::odd(a) && heck::odd(b);
                            break;
                        case 3:
                            ok = heck::odd(m1) && heck::odd(a) &&
                                 cong(i, (static_cast<long>(m1) * a + 1) / 2) &&
                                 cong(j, static_cast<long>(m2) * b) && std::gcd(m1, b) == 1 &&
                                 heck::even(b - (m1 * a + 1) / 2);
                            break;
                        case 4:
                            ok = cong(i, 3L * a - 1) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(3, b) == 1 && (a - b) % 2 == 0;
                            break;
                        case 5:
                            ok = cong(i, 4L + 12 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(6, b) == 1;
                            break;
                        case 6:
                            ok = cong(i, 9L + 12 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(6, b) == 1;
                            break;
                        case 7:
                            ok = cong(i, 12L + 18 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(3, b) == 1 && heck::even(b);
                            break;
                        case 8:
                            ok = cong(i, 7L + 18 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(3, b) == 1 && heck::odd(b);
                            break;
                        case 9:
                            ok = cong(i, 2L + 8 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(2, b) == 1;
                            break;
                        case 10:
                            ok = cong(i, 7L + 8 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(2, b) == 1;
                            break;
                        case 11:
                            ok = cong(i, 8L + 24 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(12, b) == 1;
                            break;
                        case 12:
                            ok = cong(i, 17L + 24 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(12, b) == 1;
                            break;
                        case 13:
                            ok = cong(i, 2L + 10 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(5, b) == 1 && heck::even(b);
                            break;
                        case 14:
                            ok = cong(i, 9L + 10 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(5, b) == 1 && heck::odd(b);
                            break;
                        case 15:
                            ok = cong(i, 17L + 20 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(10, b) == 1;
                            break;
                        case 16:
                            ok = cong(i, 4L + 20 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(10, b) == 1;
                            break;
                        case 17:
                            ok = cong(i, 25L + 30 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(15, b) == 1 && heck::even(b);
                            if (!ok) {
                                ok = cong(i, 10L + 30 * a) && cong(j, static_cast<long>(m2) * b) &&
                                     std::gcd(15, b) == 1 && heck::odd(b);
                                form = 2;
                            }
                            break;
                        case 18:
                            ok = cong(i, 6L + 30 * a) && cong(j, static_cast<long>(m2) * b) &&
                                 std::gcd(15, b) == 1 && heck::odd(b);
                            if (!ok) {
                                ok = cong(i, 21L + 30 * a) && cong(j, static_cast<long>(m2) * b) &&
                                     std::gcd(15, b) == 1 && heck::even(b);
                                form = 2;
                            }
                            break;
                        default:
                            break;
                    }
                    if (ok) return HeckMatch{row, m1, m2, a, b, form};
                }
        }
    }
    return std::nullopt;
}

// Braided tensors in the letters v0, v1: a homogeneous element of T^k is a
// list of (word index, coefficient) with the leftmost letter most significant.
using Tensor = std::vector<std::pair<int, Cyc>>;

namespace ncpoly {

inline Tensor letter(int i) { return {{i, Cyc::integer(1)}}; }

inline Tensor concat(const Tensor& a, int dega, const Tensor& b, int degb, int d = 2) {
    (void)dega;
    int shift = 1;
    for (int t = 0; t < degb; ++t) shift *= d;
    std::map<int, Cyc> acc;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            auto key = wa * shift + wb;
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(key, ca * cb); else it->second += ca * cb;
        }
    Tensor out;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.emplace_back(k, v);
    return out;
}

inline Tensor combine(std::initializer_list<std::pair<Tensor, Cyc>> parts) {
    std::map<int, Cyc> acc;
    for (const auto& [t, scale] : parts)
        for (const auto& [w, c] : t) {
            auto it = acc.find(w);
            if (it == acc.end()) acc.emplace(w, scale * c); else it->second += scale * c;
        }
    Tensor out;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.emplace_back(k, v);
    return out;
}

inline Tensor power(const Tensor& a, int dega, int e) {
    Tensor acc = {{0, Cyc::integer(1)}};
    int deg = 0;
    for (int t = 0; t < e; ++t) {
        acc = concat(acc, deg, a, dega);
        deg += dega;
    }
    return acc;
}

}  // namespace ncpoly

// A presented Nichols algebra: braiding data, defining relations as
// homogeneous tensors, PBW exponent bounds, expected dimension and Hilbert
// series.
struct PresentationSpec {
    std::string prop;
    int m1 = 0, m2 = 0, a = 0, b = 0;
    bool braiding_displayed = false;
    CycMat braiding;  // 4x4 when displayed
    std::vector<std::string> relation_names;
    std::vector<std::pair<int, Tensor>> relations;  // (degree, element)
    std::vector<std::pair<int, int>> hilbert_factors;
    std::vector<long long> pbw_bounds;
    long long expected_dim = 0;

    HilbertPoly expected_hilbert() const { return hilbert_expand(hilbert_factors); }
};

namespace detail_pres {

inline CycMat braiding_matrix(
    int N, const std::array<std::array<std::vector<std::pair<int, Cyc>>, 2>, 2>& entries) {
    // entries[i][j] lists (target word uv, coeff) for c(v_i (x) v_j)
    CycMat c(4, 4, N);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [uv, coeff] : entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                c.at(uv, i * 2 + j) = coeff;
    return c;
}

}  // namespace detail_pres

// Instantiate the presented Nichols algebra for the first five table rows.
inline std::optional<PresentationSpec> presentation_for(int m, int i, int j) {
    const auto match = heck_match(m, i, j);
    if (!match || match->row.row_id > 5) return std::nullopt;
    const Params P(2, m);
    const int m1 = match->m1, m2 = match->m2, a = match->a, b = match->b;
    PresentationSpec spec;
    spec.m1 = m1;
    spec.m2 = m2;
    spec.a = a;
    spec.b = b;
    const Tensor v0 = ncpoly::letter(0), v1 = ncpoly::letter(1);
    const Cyc one = P.one();

    if (match->row.row_id == 1) {  // relations of the (2,1) family
        const Cyc xmb = P.xi(-static_cast<long>(m2) * b);
        const bool modd = m1 % 2 == 1;
        spec.prop = modd ? "square-relation family, odd half" : "square-relation family, even half";
        const int nil0 = modd ? m1 : 2 * m1;
        spec.relation_names = {"v0 nilpotency", "commutation", "v1^2 relation"};
        spec.relations.push_back({nil0, ncpoly::power(v0, 1, nil0)});
        if (modd) {
            spec.relations.push_back(
                {2, ncpoly::combine({{ncpoly::concat(v0, 1, v1, 1), one},
                                     {ncpoly::concat(v1, 1, v0, 1), -one}})});
            const Cyc coef = (one + xmb) * (one + xmb);
            spec.relations.push_back(
                {2, ncpoly::combine({{ncpoly::power(v1, 1, 2), one}, {ncpoly::power(v0, 1, 2), -coef}})});
            spec.braiding_displayed = true;
            spec.braiding = detail_pres::braiding_matrix(
                P.N, {{{{{{0, -xmb}}, {{2, one}, {1, -(xmb + one)}}}},
                       {{{{1, -xmb}}, {{3, -one}, {0, (one - xmb * xmb) * (xmb + one)}}}}}});
        } else {
            spec.relations.push_back(
                {2, ncpoly::combine({{ncpoly::concat(v0, 1, v1, 1), one},
                                     {ncpoly::concat(v1, 1, v0, 1), one}})});
            const Cyc coef = (one - xmb) * (one - xmb);
            spec.relations.push_back(
                {2, ncpoly::combine({{ncpoly::power(v1, 1, 2), one}, {ncpoly::power(v0, 1, 2), coef}})});
            spec.braiding_displayed = true;
            spec.braiding = detail_pres::braiding_matrix(
                P.N, {{{{{{0, xmb}}, {{2, -one}, {1, xmb - one}}}},
                       {{{{1, -xmb}}, {{3, -one}, {0, (one - xmb * xmb) * (xmb - one)}}}}}});
        }
        const int nil1 = 2;
        spec.pbw_bounds = {nil0, nil1};
        spec.hilbert_factors = {{nil0, 1}, {2, 1}};
        spec.expected_dim = static_cast<long long>(nil0) * nil1;
        return spec;
    }

    if (match->row.row_id == 2) {  // relations of the (2,2) family
        const Cyc xmb = P.xi(-static_cast<long>(m2) * b);
        const bool modd = m1 % 2 == 1;
        spec.prop = "mixed-commutation family";
        const int nil1 = modd ? m1 : 2 * m1;
        spec.relation_names = {"v0^2", "v1 nilpotency", "mixed commutation"};
        spec.relations.push_back({2, ncpoly::power(v0, 1, 2)});
        spec.relations.push_back({nil1, ncpoly::power(v1, 1, nil1)});
        spec.relations.push_back(
            {2, ncpoly::combine({{ncpoly::concat(v0, 1, v1, 1), one},
                                 {ncpoly::concat(v1, 1, v0, 1), xmb}})});
        spec.pbw_bounds = {2, nil1};
        spec.hilbert_factors = {{nil1, 1}, {2, 1}};
        spec.expected_dim = 2LL * nil1;
        return spec;
    }

    if (match->row.row_id == 3) {  // the two (4,*) families, by parity of b
        const long mab = static_cast<long>(m) * a * b;
        const long m2b = static_cast<long>(m2) * b;
        // the half-exponents are integral under the row's parity conditions
        if ((mab + m2b) % 2 != 0 || (mab - m2b) % 2 != 0)
            throw VerificationError("half-integer exponent in the cubic-glue family");
        if (b % 2 == 0) {
            const Cyc p = P.xi((mab + m2b) / 2);
            const Cyc k = (one - P.xi(2 * m2b)) * P.xi((mab - m2b) / 2) * (one - P.xi(m2b));
            const Tensor v10 = ncpoly::combine(
                {{ncpoly::concat(v1, 1, v0, 1), one}, {ncpoly::concat(v0, 1, v1, 1), -p}});
            spec.prop = "cubic-glue family, even side";
            spec.relation_names = {"v10 v0 commutation", "v1 v10 relation", "v0 nilpotency",
                                   "v1 nilpotency"};
            spec.relations.push_back(
                {3, ncpoly::combine({{ncpoly::concat(v10, 2, v0, 1), one},
                                     {ncpoly::concat(v0, 1, v10, 2), -one}})});
            spec.relations.push_back(
                {3, ncpoly::combine({{ncpoly::concat(v1, 1, v10, 2), one},
                                     {ncpoly::concat(v10, 2, v1, 1), p * p},
                                     {ncpoly::power(v0, 1, 3), k * p * (p - one)}})});
            spec.relations.push_back({m1, ncpoly::power(v0, 1, m1)});
            spec.relations.push_back({2 * m1, ncpoly::power(v1, 1, 2 * m1)});
            spec.pbw_bounds = {m1, 2, 2 * m1};
            spec.hilbert_factors = {{m1, 1}, {2, 2}, {2 * m1, 1}};
            spec.expected_dim = 4LL * m1 * m1;
            spec.braiding_displayed = true;
            const Cyc pinv = p.inv();
            spec.braiding = detail_pres::braiding_matrix(
                P.N, {{{{{{0, p}}, {{2, pinv}, {1, p - pinv}}}},
                       {{{{1, p}}, {{3, -pinv}, {0, k}}}}}});
        } else {
            const Cyc p = P.xi((mab - m2b) / 2);
            const Cyc q = -p.inv();
            const Cyc k = (one - P.xi(2 * m2b)) * P.xi((mab - m2b) / 2) * (one + P.xi(m2b));
            const Tensor v10 = ncpoly::combine(
                {{ncpoly::concat(v1, 1, v0, 1), one}, {ncpoly::concat(v0, 1, v1, 1), q}});
            spec.prop = "cubic-glue family, odd side";
            spec.relation_names = {"v10 v0 anticommutation", "v1 v10 relation", "v0 nilpotency",
                                   "v1^{m1} relation"};
            spec.relations.push_back(
                {3, ncpoly::combine({{ncpoly::concat(v10, 2, v0, 1), one},
                                     {ncpoly::concat(v0, 1, v10, 2), one}})});
            spec.relations.push_back(
                {3, ncpoly::combine({{ncpoly::concat(v1, 1, v10, 2), one},
                                     {ncpoly::concat(v10, 2, v1, 1), -(q * q)},
                                     {ncpoly::power(v0, 1, 3), k * q * (q - one)}})});
            spec.relations.push_back({2 * m1, ncpoly::power(v0, 1, 2 * m1)});
            // v1^{m1} + (-k)^{(m1-1)/2} p^{(1-m1^2)/2} / ((p^2+1)^{(m1-1)/2} (p+1)) v0^{m1-2} v10
            Cyc num = one;
            for (int t = 0; t < (m1 - 1) / 2; ++t) num *= -k;
            num *= p.pow((1 - static_cast<long>(m1) * m1) / 2);
            Cyc den = p + one;
            for (int t = 0; t < (m1 - 1) / 2; ++t) den *= p * p + one;
            spec.relations.push_back(
                {m1, ncpoly::combine({{ncpoly::power(v1, 1, m1), one},
                                      {ncpoly::concat(ncpoly::power(v0, 1, m1 - 2), m1 - 2, v10, 2),
                                       num / den}})});
            spec.pbw_bounds = {2 * m1, 2, m1};
            spec.hilbert_factors = {{2 * m1, 1}, {2, 2}, {m1, 1}};
            spec.expected_dim = 4LL * m1 * m1;
            spec.braiding_displayed = true;
            spec.braiding = detail_pres::braiding_matrix(
                P.N, {{{{{{0, q}}, {{2, p}, {1, p + q}}}},
                       {{{{1, -q}}, {{3, p}, {0, k}}}}}});
        }
        return spec;
    }

    if (match->row.row_id == 4) {  // the 18-dimensional family
        const Cyc sgn = Cyc::integer(heck::odd(a) ? -1 : 1, P.N);
        const Cyc p = sgn * P.xi(-static_cast<long>(m2) * b);
        const Cyc q = p * p;  // p in G_3', so p^{-1} = p^2
        const Cyc k = sgn * (p - one);
        const Cyc two = Cyc::integer(2, P.N);
        // v10 = v1 v0 - (-1)^{a+1} p v0 v1 = v1 v0 + (-1)^a p v0 v1
        const Tensor v10 = ncpoly::combine(
            {{ncpoly::concat(v1, 1, v0, 1), one}, {ncpoly::concat(v0, 1, v1, 1), sgn * p}});
        spec.prop = "dimension-18 family";
        spec.relation_names = {"v0^3", "v10 v0 relation", "v1 v10 relation", "v1^3 relation"};
        spec.relations.push_back({3, ncpoly::power(v0, 1, 3)});
        spec.relations.push_back(
            {3, ncpoly::combine({{ncpoly::concat(v10, 2, v0, 1), one},
                                 {ncpoly::concat(v0, 1, v10, 2), sgn * (one + two * q)},
                                 {ncpoly::concat(ncpoly::power(v0, 1, 2), 2, v1, 1), -two}})});
        spec.relations.push_back(
            {3, ncpoly::combine({{ncpoly::concat(v1, 1, v10, 2), one},
                                 {ncpoly::concat(v10, 2, v1, 1), sgn * (two + q)},
                                 {ncpoly::concat(v0, 1, ncpoly::power(v1, 1, 2), 2), -two * p}})});
        spec.relations.push_back(
            {3, ncpoly::combine({{ncpoly::power(v1, 1, 3), one},
                                 {ncpoly::concat(ncpoly::power(v0, 1, 2), 2, v1, 1), sgn * (two * q - two)},
                                 {ncpoly::concat(v0, 1, v10, 2), one + two * q}})});
        spec.pbw_bounds = {3, 2, 3};
        spec.hilbert_factors = {{3, 1}, {3, 1}, {2, 2}};
        spec.expected_dim = 18;
        spec.braiding_displayed = true;
        spec.braiding = detail_pres::braiding_matrix(
            P.N, {{{{{{0, p}}, {{2, sgn * q}, {1, p + q}}}},
                   {{{{1, -sgn * p}}, {{3, q}, {0, k}}}}}});
        return spec;
    }

    // row 5: the 72-dimensional family
    const Cyc p = P.xi(4L * m2 * b);
    const Cyc q = -P.xi(3L * m2 * b);
    if (p.mult_order() != 3 || q.mult_order() != 4)
        throw VerificationError("72-family constants out of expected root groups");
    const Cyc k = p * (p + q);
    const Tensor v10 = ncpoly::combine(
        {{ncpoly::concat(v1, 1, v0, 1), one}, {ncpoly::concat(v0, 1, v1, 1), -p}});
    const Tensor v110 = ncpoly::combine(
        {{ncpoly::concat(v1, 1, v10, 2), one}, {ncpoly::concat(v10, 2, v1, 1), -(p * q)}});
    spec.prop = "dimension-72 family";
    spec.relation_names = {"v0^3", "v10 v0 relation", "v1 v110 relation", "v1^4 relation"};
    spec.relations.push_back({3, ncpoly::power(v0, 1, 3)});
    spec.relations.push_back(
        {3, ncpoly::combine({{ncpoly::concat(v10, 2, v0, 1), one},
                             {ncpoly::concat(v0, 1, v10, 2), p * (q + one)},
                             {ncpoly::concat(ncpoly::power(v0, 1, 2), 2, v1, 1), p * p * q}})});
    spec.relations.push_back(
        {4, ncpoly::combine({{ncpoly::concat(v1, 1, v110, 3), one},
                             {ncpoly::concat(v110, 3, v1, 1), -(one - p - p * q)},
                             {ncpoly::concat(v10, 2, ncpoly::power(v1, 1, 2), 2), -(p - one) * (one - p * q)},
                             {ncpoly::concat(v0, 1, ncpoly::power(v1, 1, 3), 3), -(p * (p - one))},
                             {ncpoly::concat(ncpoly::power(v0, 1, 2), 2, v10, 2), -(p * (p * q - one))}})});
    const Cyc pq2 = (p + q) * (p + q);
    const Cyc two = Cyc::integer(2, P.N);
    // coefficient 2p^2 - p + q(2 - p) of v0^2 v1^2
    const Cyc quartic_coeff = two * p * p - p + q * (two - p);
    spec.relations.push_back(
        {4, ncpoly::combine(
                {{ncpoly::power(v1, 1, 4), one},
                 {ncpoly::concat(ncpoly::power(v0, 1, 2), 2, ncpoly::power(v1, 1, 2), 2),
                  pq2 * quartic_coeff},
                 {ncpoly::concat(ncpoly::concat(v0, 1, v10, 2), 3, v1, 1), pq2 * (p - one - q)},
                 {ncpoly::power(v10, 2, 2), -(pq2 * (one + p * q))},
                 {ncpoly::concat(v0, 1, v110, 3), pq2 * (one - p - p * p * q)}})});
    spec.pbw_bounds = {3, 3, 2, 4};
    spec.hilbert_factors = {{4, 1}, {3, 1}, {3, 2}, {2, 3}};
    spec.expected_dim = 72;
    spec.braiding_displayed = true;
    spec.braiding = detail_pres::braiding_matrix(
        P.N, {{{{{{0, p}}, {{2, -q}, {1, p + q}}}},
               {{{{1, p}}, {{3, q}, {0, k}}}}}});
    return spec;
}

// Check a presented Nichols algebra against a braided space: braiding
// structure constants, relations in the ideal (symmetrizer kernel, with the
// derivation tower cross-check inside relation_member), graded dimensions
// equal to the Hilbert coefficients, and the total dimension.
struct PresentationReport {
    Report report;
    bool braiding_matched = true;
    GradedDims dims;
};

inline PresentationReport verify_presentation(const PresentationSpec& spec,
                                              const BraidedSpace& braided, long budget = 4096) {
    PresentationReport out;
    if (spec.braiding_displayed) {
        // exact structure-constant comparison; on mismatch the transported
        // braiding wins for the checks below and the event is reported
        out.braiding_matched = braided.dim == 2;
        if (out.braiding_matched) {
            CycMat want = spec.braiding;
            out.braiding_matched = (want - braided.c).is_zero();
        }
        out.report.check(out.braiding_matched, "braiding matches the displayed coefficients");
    }
    for (std::size_t r = 0; r < spec.relations.size(); ++r) {
        const auto& [deg, elem] = spec.relations[r];
        const bool member = relation_member(braided, deg, elem, budget);
        out.report.check(member, "relation in kernel: " + spec.relation_names[r]);
    }
    const HilbertPoly expect = spec.expected_hilbert();
    const int top = static_cast<int>(expect.coeffs.size()) - 1;
    // highest degree reachable within the tensor budget
    int horizon = 0;
    for (long size = braided.dim; horizon < top + 1 && size <= budget; size *= braided.dim) ++horizon;
    out.dims = graded_dims_derivation(braided, horizon, budget);
    bool hilbert_ok = true;
    for (int k = 0; k <= std::min(top, horizon); ++k)
        hilbert_ok = hilbert_ok && k < static_cast<int>(out.dims.dims.size()) &&
                     out.dims.dims[static_cast<std::size_t>(k)] ==
                         (k < static_cast<int>(expect.coeffs.size())
                              ? expect.coeffs[static_cast<std::size_t>(k)]
                              : 0);
    if (horizon >= top + 1) {
        out.report.check(hilbert_ok && out.dims.truncated,
                         "graded dimensions equal the Hilbert coefficients and truncate");
    } else {
        out.report.check(hilbert_ok,
                         "graded dimensions equal the Hilbert coefficients through the budget horizon");
    }
    long long total = 0;
    for (int k = 0; k <= std::min(top, static_cast<int>(out.dims.dims.size()) - 1); ++k)
        total += out.dims.dims[static_cast<std::size_t>(k)];
    out.report.check(total == spec.expected_dim, "total dimension");
    long long pbw = 1;
    for (long long bnd : spec.pbw_bounds) pbw *= bnd;
    out.report.check(pbw == spec.expected_dim, "PBW bounds product equals the dimension");
    return out;
}

// Full finiteness decision for one pair, with certificate and empirical probe.
struct FiniteResult {
    int i = 0, j = 0;
    int dim_module = 0;
    Dynkin2 diagram;
    bool finite = false;
    std::string certificate;
    std::optional<HeckMatch> match;
    // probe outcome: 0 = truncation seen, 1 = no truncation through horizon,
    // 2 = budget exhausted before the horizon
    int probe = 2;
    std::vector<long long> probe_dims;
};

inline FiniteResult is_finite(const Transport& tr, int i, int j, long budget = 4096) {
    const int m = tr.params().m;
    FiniteResult res;
    res.i = i;
    res.j = j;
    res.dim_module = r_of(2, m, i, j);
    res.diagram = dynkin(m, i, j);
    if (!res.diagram.connected) {
        const auto fin = rank1_finite(m, i, j);
        res.finite = fin.value();
        res.certificate = res.finite
                              ? "disconnected diagram, rank-one pieces both truncated (j = m, i odd)"
                              : "disconnected diagram with a polynomial rank-one piece";
    } else if (res.diagram.edge == Cyc::integer(-1)) {
        res.finite = false;
        res.certificate = "edge label -1 forces a vertex label 1: no Heckenberger diagram";
    } else {
        res.match = heck_match(m, i, j);
        res.finite = res.match.has_value();
        if (res.finite) {
            std::ostringstream os;
            os << "table row " << res.match->row.row_id << " (HK";
            for (auto [k, l] : res.match->row.kl) os << " " << k << "." << l;
            os << ") with witness (m1,m2,a,b) = (" << res.match->m1 << "," << res.match->m2 << ","
               << res.match->a << "," << res.match->b << ")";
            res.certificate = os.str();
        } else {
            res.certificate = "connected diagram matches no table row";
        }
    }

    // empirical probe on the transported braiding: truncation within the
    // budget must agree with the classification. Absence of truncation only
    // contradicts finiteness when the expected top degree is known (a
    // presented family or a one-dimensional module); for the other finite
    // table rows the probe can only confirm, never refute, within a budget.
    const BraidedSpace B = braiding_of(tr.transport(build_simple(2, m, i, j)));
    long horizon = 8;
    bool top_known = true;
    if (res.finite) {
        if (auto spec = presentation_for(m, i, j)) {
            horizon = static_cast<long>(spec->expected_hilbert().coeffs.size());
        } else if (res.dim_module == 1) {
            horizon = 2L * m + 1;
        } else {
            top_known = false;
            horizon = 0;  // highest degree within the budget
            for (long size = 1; size * B.dim <= budget; size *= B.dim) ++horizon;
        }
    }
    DerivationTower tower(B, budget);
    long reached = 0;
    try {
        tower.extend_to(static_cast<int>(horizon));
        reached = horizon;
    } catch (const CapacityError&) {
        reached = static_cast<long>(tower.dims().size()) - 1;
    }
    res.probe_dims = tower.dims();
    if (tower.truncated())
        res.probe = 0;
    else
        res.probe = (reached >= horizon && (!res.finite || top_known)) ? 1 : 2;

    if (res.probe == 0 && !res.finite)
        throw VerificationError("probe truncated but pair classified infinite");
    if (res.probe == 1 && res.finite)
        throw VerificationError("pair classified finite but probe saw no truncation");
    return res;
}

inline FiniteResult is_finite(int m, int i, int j, long budget = 4096) {
    return is_finite(Transport(2, m), i, j, budget);
}

// The dual transformation (i, j) -> (1 - i, m - j) matches the partner table
// row with the same Heckenberger row number.
inline bool dual_symmetry_holds(int m) {
    const int M = 2 * m;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            const Dynkin2 D = dynkin(m, i, j);
            if (!D.connected) continue;
            const int di = ((1 - i) % M + M) % M;
            const int dj = ((m - j) % M + M) % M;
            const auto a = heck_match(m, i, j);
            const auto b = heck_match(m, di, dj);
            if (a.has_value() != b.has_value()) return false;
            if (a && b && a->row.dual_row != b->row.row_id) return false;
        }
    return true;
}

// Nichols dimension for a finite pair: via the verified presentation when one
// is given, else via the truncated probe.
struct NicholsOutcome {
    long long dim = 0;
    std::vector<long long> graded;
    bool presentation_verified = false;
    bool braiding_matched = true;
};

inline NicholsOutcome nichols_dimension(const Transport& tr, int i, int j, long budget = 4096) {
    NicholsOutcome out;
    const int m = tr.params().m;
    // the presentations describe the braiding of V_{i,j} over the dual host,
    // i.e. the braided space of F1(V_{i,j})
    const BraidedSpace B = braiding_of(tr.F1(build_simple(2, m, i, j)));
    if (auto spec = presentation_for(m, i, j)) {
        const PresentationReport rep = verify_presentation(*spec, B, budget);
        if (!rep.report.ok) {
            std::string msg = "presentation verification failed at (" + std::to_string(i) + "," +
                              std::to_string(j) + "):";
            for (const auto& e : rep.report.entries)
                if (e.rfind("FAIL", 0) == 0) msg += " [" + e + "]";
            throw VerificationError(msg);
        }
        out.dim = spec->expected_dim;
        out.graded = rep.dims.dims;
        out.presentation_verified = true;
        out.braiding_matched = rep.braiding_matched;
        return out;
    }
    // no presented family: the graded probe must reach the truncation within
    // the budget for the dimension to be known
    int horizon = 0;
    for (long size = 1; size * B.dim <= budget; size *= B.dim) ++horizon;
    const GradedDims g = graded_dims_derivation(B, horizon, budget);
    if (!g.truncated)
        throw CapacityError("Nichols dimension not reachable within the tensor budget");
    out.dim = g.total();
    out.graded = g.dims;
    return out;
}

inline NicholsOutcome nichols_dimension(int m, int i, int j, long budget = 4096) {
    return nichols_dimension(Transport(2, m), i, j, budget);
}

struct TheoremReport {
    int m = 0;
    std::vector<FiniteResult> all;
    std::vector<std::pair<int, int>> finite_pairs;
    std::map<std::pair<int, int>, long long> nichols_dims;
    bool ok = false;
    std::string detail;
};

inline TheoremReport reproduce_finiteness(
    int m, const std::vector<std::pair<int, int>>& expected_finite,
    const std::map<std::pair<int, int>, long long>& expected_dims, long budget = 4096) {
    TheoremReport rep;
    rep.m = m;
    rep.ok = true;
    const Transport tr(2, m);
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * m; ++j) {
            FiniteResult r = is_finite(tr, i, j, budget);
            if (r.finite) rep.finite_pairs.emplace_back(i, j);
            rep.all.push_back(std::move(r));
        }
    std::vector<std::pair<int, int>> want = expected_finite;
    std::sort(want.begin(), want.end());
    std::vector<std::pair<int, int>> got = rep.finite_pairs;
    std::sort(got.begin(), got.end());
    if (want != got) {
        rep.ok = false;
        rep.detail = "finite set mismatch";
        return rep;
    }
    for (const auto& [i, j] : rep.finite_pairs) {
        const NicholsOutcome out = nichols_dimension(tr, i, j, budget);
        rep.nichols_dims[{i, j}] = out.dim;
        auto it = expected_dims.find({i, j});
        if (it == expected_dims.end() || it->second != out.dim) {
            rep.ok = false;
            rep.detail = "Nichols dimension mismatch at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")";
            return rep;
        }
    }
    rep.detail = "all pairs classified and dimensioned as stated";
    return rep;
}

inline TheoremReport reproduce_thm22(long budget = 4096) {
    return reproduce_finiteness(
        2, {{1, 2}, {3, 2}, {3, 1}, {3, 3}, {2, 1}, {2, 3}},
        {{{1, 2}, 2}, {{3, 2}, 2}, {{3, 1}, 8}, {{3, 3}, 8}, {{2, 1}, 8}, {{2, 3}, 8}}, budget);
}

inline TheoremReport reproduce_thm23(long budget = 4096) {
    return reproduce_finiteness(
        3,
        {{1, 3}, {3, 3}, {5, 3}, {4, 2}, {4, 4}, {3, 1}, {3, 5}, {2, 2}, {2, 4}, {5, 1}, {5, 5},
         {5, 2}, {5, 4}, {2, 1}, {2, 5}},
        {{{1, 3}, 2},  {{3, 3}, 2},  {{5, 3}, 2},  {{4, 2}, 6},  {{4, 4}, 6},
         {{3, 1}, 6},  {{3, 5}, 6},  {{2, 2}, 36}, {{2, 4}, 36}, {{5, 1}, 36},
         {{5, 5}, 36}, {{5, 2}, 18}, {{5, 4}, 18}, {{2, 1}, 18}, {{2, 5}, 18}},
        budget);
}

}  // namespace radford
