#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "radford/qnum.hpp"
#include "radford/transport.hpp"

namespace radford {

// Positive braid word on a given number of strands; letters are generator
// indices 1 <= i <= strands-1.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
};

// Canonical reduced word of a permutation (one-line notation, 0-based values):
// bubble each value left into place; length equals the inversion count.
inline BraidWord matsumoto(std::vector<int> perm) {
    BraidWord w;
    w.strands = static_cast<int>(perm.size());
    for (int target = 0; target < w.strands; ++target) {
        int pos = target;
        while (perm[static_cast<std::size_t>(pos)] != target) ++pos;
        while (pos > target) {
            std::swap(perm[static_cast<std::size_t>(pos - 1)], perm[static_cast<std::size_t>(pos)]);
            w.letters.push_back(pos);  // sigma_pos acts on strands (pos, pos+1), 1-based
            --pos;
        }
    }
    return w;
}

namespace braid {

// sparse column vectors over the monomial basis of T^k
using Col = std::map<int, Cyc>;

inline void add_into(Col& acc, int key, const Cyc& c) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, c);
    else
        it->second += c;
}

inline void prune(Col& col) {
    for (auto it = col.begin(); it != col.end();)
        it = it->second.is_zero() ? col.erase(it) : std::next(it);
}

// Apply the braiding at slot i (1-based, acting on letters i, i+1 of k).
inline Col apply_ci(const BraidedSpace& B, int k, int i, const Col& v) {
    const int d = B.dim;
    int right = 1;
    for (int t = 0; t < k - i - 1; ++t) right *= d;
    const int pairstride = right;  // letters at positions i, i+1 have strides d*right, right
    Col out;
    for (const auto& [w, c] : v) {
        const int low = w % pairstride;
        const int rs = (w / pairstride) % (d * d);
        const int high = w / (pairstride * d * d);
        const int r = rs / d, s = rs % d;
        for (int rp = 0; rp < d; ++rp)
            for (int sp = 0; sp < d; ++sp) {
                const Cyc& cc = B.c.at(rp * d + sp, r * d + s);
                if (cc.is_zero()) continue;
                add_into(out, (high * d * d + rp * d + sp) * pairstride + low, c * cc);
            }
    }
    prune(out);
    return out;
}

inline Col apply_word(const BraidedSpace& B, int k, const std::vector<int>& letters, Col v) {
    // rho(l_1 l_2 ... l_t) = rho(l_1) rho(l_2) ... rho(l_t) applied to v
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = apply_ci(B, k, *it, v);
    return v;
}

}  // namespace braid

// Quantum symmetrizer column by brute-force enumeration of S_k (oracle).
inline braid::Col brute_symmetrizer_column(const BraidedSpace& B, int k, int w) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    braid::Col acc;
    do {
        const BraidWord bw = matsumoto(perm);
        braid::Col v{{w, Cyc::integer(1)}};
        v = braid::apply_word(B, k, bw.letters, std::move(v));
        for (const auto& [key, c] : v) braid::add_into(acc, key, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    braid::prune(acc);
    return acc;
}

// T_k = id + c_{k-1} + c_{k-1}c_{k-2} + ... + c_{k-1}...c_1 (composition reads
// right to left), the last-slot coproduct factor of Q_k = (Q_{k-1} (x) id) T_k.
// Computed through the recursion T_k = id + c_{k-1} (T_{k-1} (x) id).
inline braid::Col tk_column(const BraidedSpace& B, int k, int w) {
    if (k <= 1) return braid::Col{{w, Cyc::integer(1)}};
    const int d = B.dim;
    const int t = w % d, rest = w / d;
    const braid::Col inner = tk_column(B, k - 1, rest);
    braid::Col shifted;
    for (const auto& [key, c] : inner) shifted.emplace(key * d + t, c);
    braid::Col out = braid::apply_ci(B, k, k - 1, shifted);
    braid::add_into(out, w, Cyc::integer(1));
    braid::prune(out);
    return out;
}

// Symmetrizer columns by the coset factorization, level by level.
class Symmetrizer {
public:
    explicit Symmetrizer(const BraidedSpace& B, long budget = 4096) : B_(B), budget_(budget) {
        qcols_.push_back({braid::Col{{0, Cyc::integer(1)}}});  // Q_0 = id on T^0
    }

    // columns of Q_k over all monomials of T^k
    const std::vector<braid::Col>& columns(int k) {
        extend_to(k);
        return qcols_[static_cast<std::size_t>(k)];
    }

    braid::Col apply(int k, const braid::Col& v) {
        extend_to(k);
        braid::Col out;
        for (const auto& [w, c] : v)
            for (const auto& [key, cc] : qcols_[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)])
                braid::add_into(out, key, c * cc);
        braid::prune(out);
        return out;
    }

private:
    void extend_to(int k) {
        const int d = B_.dim;
        while (static_cast<int>(qcols_.size()) <= k) {
            const int level = static_cast<int>(qcols_.size());
            long size = 1;
            for (int t = 0; t < level; ++t) {
                size *= d;
                if (size > budget_) throw CapacityError("symmetrizer exceeds tensor budget");
            }
            std::vector<braid::Col> cols(static_cast<std::size_t>(size));
            const auto& prev = qcols_[static_cast<std::size_t>(level - 1)];
            for (int w = 0; w < size; ++w) {
                // Q_level(w) = (Q_{level-1} (x) id)(T_level(w))
                const braid::Col tk = tk_column(B_, level, w);
                braid::Col out;
                for (const auto& [key, c] : tk) {
                    const int t = key % d, rest = key / d;
                    for (const auto& [pkey, pc] : prev[static_cast<std::size_t>(rest)])
                        braid::add_into(out, pkey * d + t, c * pc);
                }
                braid::prune(out);
                cols[static_cast<std::size_t>(w)] = std::move(out);
            }
            qcols_.push_back(std::move(cols));
        }
    }

    BraidedSpace B_;
    long budget_;
    std::vector<std::vector<braid::Col>> qcols_;
};

inline bool is_diagonal_braiding(const BraidedSpace& B) {
    const int d = B.dim;
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v)
                    if (!B.c.at(u * d + v, s * d + t).is_zero() && !(u == t && v == s)) return false;
    return true;
}

namespace braid {

inline std::vector<int> content_of(int w, int k, int d) {
    std::vector<int> cnt(static_cast<std::size_t>(d), 0);
    for (int t = 0; t < k; ++t) {
        ++cnt[static_cast<std::size_t>(w % d)];
        w /= d;
    }
    return cnt;
}

inline int rank_of_columns(const std::vector<Col>& cols, const std::vector<int>& keys,
                           int order) {
    std::map<int, int> key_row;
    for (std::size_t t = 0; t < keys.size(); ++t) key_row.emplace(keys[t], static_cast<int>(t));
    CycMat m(static_cast<int>(keys.size()), static_cast<int>(cols.size()), order);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [key, val] : cols[c]) m.at(key_row.at(key), static_cast<int>(c)) = val;
    return rank(std::move(m));
}

}  // namespace braid

// rank of Q_k on T^k(V); blockwise per multidegree for diagonal braidings
inline int symmetrizer_rank(const BraidedSpace& B, int k, long budget = 4096) {
    if (k == 0) return 1;
    const int d = B.dim;
    long size = 1;
    for (int t = 0; t < k; ++t) {
        size *= d;
        if (size > budget) throw CapacityError("symmetrizer exceeds tensor budget");
    }
    Symmetrizer sym(B, budget);
    const auto& cols = sym.columns(k);
    const int order = B.c.at(0, 0).order();
    if (is_diagonal_braiding(B)) {
        std::map<std::vector<int>, std::vector<int>> blocks;
        for (int w = 0; w < size; ++w) blocks[braid::content_of(w, k, d)].push_back(w);
        int total = 0;
        for (const auto& [content, ws] : blocks) {
            std::vector<braid::Col> sub;
            for (int w : ws) sub.push_back(cols[static_cast<std::size_t>(w)]);
            total += braid::rank_of_columns(sub, ws, order);
        }
        return total;
    }
    std::vector<int> keys(static_cast<std::size_t>(size));
    std::iota(keys.begin(), keys.end(), 0);
    return braid::rank_of_columns(cols, keys, order);
}

inline int brute_symmetrizer_rank(const BraidedSpace& B, int k, long budget = 4096) {
    if (k == 0) return 1;
    const int d = B.dim;
    long size = 1;
    for (int t = 0; t < k; ++t) {
        size *= d;
        if (size > budget) throw CapacityError("symmetrizer exceeds tensor budget");
    }
    std::vector<braid::Col> cols(static_cast<std::size_t>(size));
    for (int w = 0; w < size; ++w) cols[static_cast<std::size_t>(w)] = brute_symmetrizer_column(B, k, w);
    std::vector<int> keys(static_cast<std::size_t>(size));
    std::iota(keys.begin(), keys.end(), 0);
    return braid::rank_of_columns(cols, keys, B.c.at(0, 0).order());
}

struct GradedDims {
    std::vector<long long> dims;  // dims[k] = dim B^k(V)
    bool truncated = false;

    long long total() const {
        long long t = 0;
        for (long long v : dims) t += v;
        return t;
    }
};

// Graded dimensions through the skew-derivation tower: J_k is the kernel of
// T^k -> B^{k-1} (x) V, x -> (pi_{k-1} (x) id) T_k(x). The level data is kept
// entirely in quotient coordinates, so each level costs O(d^k b^2 d^2).
class DerivationTower {
public:
    explicit DerivationTower(const BraidedSpace& B, long budget = 4096)
        : B_(B), d_(B.dim), budget_(budget), order_(B.c.at(0, 0).order()) {
        // level 1: R^1[e_t][s] = delta_{st} * pi_0(1), b_0 = 1
        b_ = {1, 0};
        levels_.resize(2);
        levels_[1].R.assign(static_cast<std::size_t>(d_),
                            std::vector<std::vector<Cyc>>(static_cast<std::size_t>(d_)));
        for (int t = 0; t < d_; ++t)
            for (int s = 0; s < d_; ++s)
                levels_[1].R[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
                    {s == t ? Cyc::one(order_) : Cyc::zero(order_)};
        finish_level(1);
    }

    // dims() reflects every level computed so far
    const std::vector<long long>& dims() const { return dims_; }
    bool truncated() const { return truncated_; }

    void extend_to(int k) {
        while (top_ < k && !truncated_) step();
        if (top_ < k && truncated_) {
            while (static_cast<int>(dims_.size()) <= k) dims_.push_back(0);
        }
    }

    GradedDims graded_dims(int max_deg) {
        extend_to(max_deg);
        GradedDims g;
        g.truncated = truncated_;
        g.dims.assign(dims_.begin(), dims_.begin() + std::min<std::size_t>(dims_.size(), max_deg + 1));
        return g;
    }

    // ideal membership at degree k via the projected tower
    bool in_ideal(int k, const std::vector<std::pair<int, Cyc>>& elem) {
        extend_to(k);
        if (truncated_ && k > top_) return true;
        const Level& L = levels_[static_cast<std::size_t>(k)];
        const int bprev = b_[static_cast<std::size_t>(k - 1)];
        std::vector<Cyc> acc(static_cast<std::size_t>(bprev) * d_, Cyc::zero(order_));
        for (const auto& [w, c] : elem)
            for (int s = 0; s < d_; ++s)
                for (int t = 0; t < bprev; ++t)
                    acc[static_cast<std::size_t>(s) * bprev + t] +=
                        c * L.R[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]
                           [static_cast<std::size_t>(t)];
        for (const auto& v : acc)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    struct Level {
        // R[w][s] = pi_{k-1}(G_s(w)), a b_{k-1}-vector per monomial and letter
        std::vector<std::vector<std::vector<Cyc>>> R;
        CycMat pi;               // b_k x d^k, RREF rows of the stacked R data
        std::vector<int> pivots; // pivot monomials of pi
        CycMat F;                // b_k x (b_{k-1} d): induced map B^{k-1} (x) V -> B^k
    };

    // derive pi_k, pivots, F_k, and b_k from the R data of level k
    void finish_level(int k) {
        Level& L = levels_[static_cast<std::size_t>(k)];
        const int bprev = b_[static_cast<std::size_t>(k - 1)];
        const long size = static_cast<long>(L.R.size());
        CycMat D(bprev * d_, static_cast<int>(size), order_);
        for (long w = 0; w < size; ++w)
            for (int s = 0; s < d_; ++s)
                for (int t = 0; t < bprev; ++t)
                    D.at(s * bprev + t, static_cast<int>(w)) =
                        L.R[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]
                           [static_cast<std::size_t>(t)];
        L.pivots = D.rref();
        const int bk = static_cast<int>(L.pivots.size());
        L.pi = CycMat(bk, static_cast<int>(size), order_);
        for (int r = 0; r < bk; ++r)
            for (int c = 0; c < static_cast<int>(size); ++c) L.pi.at(r, c) = D.at(r, c);
        b_[static_cast<std::size_t>(k)] = bk;
        if (static_cast<int>(dims_.size()) <= k) dims_.push_back(bk);
        top_ = k;
        if (bk == 0) truncated_ = true;
    }

    void step() {
        const int k = top_;
        const Level& cur = levels_[static_cast<std::size_t>(k)];
        const int bk = b_[static_cast<std::size_t>(k)];
        const int bprev = b_[static_cast<std::size_t>(k - 1)];
        long next_size = 1;
        for (int t = 0; t < k + 1; ++t) {
            next_size *= d_;
            if (next_size > budget_) throw CapacityError("derivation tower exceeds tensor budget");
        }

        // F_k columns: F(pi_k pivot basis (x) e_t); pivot columns of an RREF
        // matrix are standard basis vectors, so F[:, (i, t)] = pi_k(wp_i * d + t)
        // is not available yet at level k+1 -- instead use the identity
        // pi_k = F_k (pi_{k-1} (x) id) evaluated on level-k monomials.
        // Build F_k from the level-k data: columns indexed (i < bprev, t < d).
        Level next;
        next.R.assign(static_cast<std::size_t>(next_size),
                      std::vector<std::vector<Cyc>>(static_cast<std::size_t>(d_)));

        CycMat F(bk, bprev * d_, order_);
        if (k >= 2) {
            const Level& prev = levels_[static_cast<std::size_t>(k - 1)];
            for (int i = 0; i < bprev; ++i) {
                const int wp = prev.pivots[static_cast<std::size_t>(i)];
                for (int t = 0; t < d_; ++t)
                    for (int r = 0; r < bk; ++r) F.at(r, i * d_ + t) = cur.pi.at(r, wp * d_ + t);
            }
        } else {
            // k = 1: pi_0 pivots reduce to the empty monomial; F_1(e_i (x) e_t)
            // with b_0 = 1 means F columns are pi_1 columns themselves
            for (int t = 0; t < d_; ++t)
                for (int r = 0; r < bk; ++r) F.at(r, t) = cur.pi.at(r, t);
        }

        for (long w = 0; w < static_cast<long>(cur.R.size()); ++w) {
            // pi_k(w): column w of pi
            std::vector<Cyc> piw(static_cast<std::size_t>(bk), Cyc::zero(order_));
            for (int r = 0; r < bk; ++r) piw[static_cast<std::size_t>(r)] = cur.pi.at(r, static_cast<int>(w));
            for (int t = 0; t < d_; ++t) {
                const long wnew = w * d_ + t;
                for (int s = 0; s < d_; ++s) {
                    std::vector<Cyc> out(static_cast<std::size_t>(bk), Cyc::zero(order_));
                    if (s == t)
                        for (int r = 0; r < bk; ++r) out[static_cast<std::size_t>(r)] += piw[static_cast<std::size_t>(r)];
                    for (int rr = 0; rr < d_; ++rr) {
                        const auto& Rv = cur.R[static_cast<std::size_t>(w)][static_cast<std::size_t>(rr)];
                        for (int rp = 0; rp < d_; ++rp) {
                            const Cyc& cc = B_.c.at(rp * d_ + s, rr * d_ + t);
                            if (cc.is_zero()) continue;
                            // F(R (x) e_{rp})
                            for (int r = 0; r < bk; ++r) {
                                Cyc acc = Cyc::zero(order_);
                                for (int q = 0; q < bprev; ++q)
                                    acc += F.at(r, q * d_ + rp) * Rv[static_cast<std::size_t>(q)];
                                out[static_cast<std::size_t>(r)] += cc * acc;
                            }
                        }
                    }
                    next.R[static_cast<std::size_t>(wnew)][static_cast<std::size_t>(s)] = std::move(out);
                }
            }
        }
        levels_.push_back(std::move(next));
        b_.push_back(0);
        finish_level(k + 1);
    }

    BraidedSpace B_;
    int d_;
    long budget_;
    int order_;
    std::vector<Level> levels_;
    std::vector<int> b_;
    std::vector<long long> dims_ = {1};
    bool truncated_ = false;
    int top_ = 0;
};

inline GradedDims graded_dims_derivation(const BraidedSpace& B, int max_deg, long budget = 4096) {
    DerivationTower tower(B, budget);
    return tower.graded_dims(max_deg);
}

// Skew-derivation family on T^k: the matrix of the f-th component of
// (id (x) dual basis) T_k, one matrix per dual-basis functional f.
inline CycMat skew_derivation(const BraidedSpace& B, int f_index, int k, long budget = 4096) {
    const int d = B.dim;
    long size = 1;
    for (int t = 0; t < k; ++t) {
        size *= d;
        if (size > budget) throw CapacityError("skew derivation exceeds tensor budget");
    }
    CycMat out(static_cast<int>(size / d), static_cast<int>(size), B.c.at(0, 0).order());
    if (k == 0) return CycMat(1, 1, B.c.at(0, 0).order());  // d_f(1) = 0
    for (int w = 0; w < size; ++w) {
        const braid::Col tk = tk_column(B, k, w);
        for (const auto& [key, c] : tk)
            if (key % d == f_index) out.at(key / d, w) += c;
    }
    return out;
}

// Membership of a homogeneous element in the Nichols ideal J_k, decided by the
// symmetrizer kernel and cross-checked against the derivation tower.
inline bool relation_member(const BraidedSpace& B, int k,
                            const std::vector<std::pair<int, Cyc>>& elem, long budget = 4096) {
    Symmetrizer sym(B, budget);
    braid::Col v;
    for (const auto& [w, c] : elem) braid::add_into(v, w, c);
    braid::prune(v);
    const bool via_q = sym.apply(k, v).empty();
    DerivationTower tower(B, budget);
    const bool via_tower = tower.in_ideal(k, elem);
    if (via_q != via_tower)
        throw VerificationError("symmetrizer and derivation tower disagree on membership");
    return via_q;
}

}  // namespace radford
