#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "radford/cyclotomic.hpp"
#include "radford/errors.hpp"

namespace radford {

// Dense matrix over Q(zeta_N). All eliminations are exact; pivoting picks the
// first nonzero entry in column order.
class CycMat {
public:
    CycMat() : rows_(0), cols_(0) {}
    CycMat(int rows, int cols, int order = 1)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Cyc::zero(order)) {}

    static CycMat identity(int n, int order = 1) {
        CycMat m(n, n, order);
        for (int i = 0; i < n; ++i) m.at(i, i) = Cyc::one(order);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyc& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Cyc& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CycMat& a, const CycMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    friend bool operator!=(const CycMat& a, const CycMat& b) { return !(a == b); }

    friend CycMat operator+(const CycMat& a, const CycMat& b) {
        CycMat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend CycMat operator-(const CycMat& a, const CycMat& b) {
        CycMat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend CycMat operator*(const Cyc& s, const CycMat& a) {
        CycMat r = a;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    friend CycMat operator*(const CycMat& a, const CycMat& b) {
        CycMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Cyc& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Cyc& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    CycMat transpose() const {
        CycMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    CycMat pow(long e) const {
        CycMat acc = identity(rows_);
        CycMat base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend CycMat kron(const CycMat& a, const CycMat& b) {
        CycMat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int p = 0; p < b.rows_; ++p)
                    for (int q = 0; q < b.cols_; ++q)
                        if (!b.at(p, q).is_zero())
                            r.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
            }
        return r;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) { p = r; break; }
            if (p < 0) continue;
            if (p != row)
                for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            const Cyc piv = at(row, col).inv();
            for (int c = col; c < cols_; ++c) at(row, c) = piv * at(row, c);
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                const Cyc f = at(r, col);
                for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    int rows_, cols_;
    std::vector<Cyc> e_;
};

inline int rank(CycMat m) { return static_cast<int>(m.rref().size()); }

// Columns span the null space of m; M * v = 0 exactly for each column v.
inline CycMat kernel(CycMat m) {
    const int n = m.cols();
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycMat ker(n, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        ker.at(fc, static_cast<int>(k)) = Cyc::integer(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return ker;
}

// One exact solution of M x = b, if any.
inline std::optional<std::vector<Cyc>> solve(const CycMat& m, const std::vector<Cyc>& b) {
    CycMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Cyc> x(static_cast<std::size_t>(m.cols()), Cyc::zero(1));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

inline CycMat inverse(const CycMat& m) {
    if (m.rows() != m.cols()) throw SingularMatrix("inverse of a non-square matrix");
    const int n = m.rows();
    CycMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Cyc::integer(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw SingularMatrix("matrix is singular");
    CycMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Column span as a matrix with independent columns (a basis of the image).
inline CycMat column_basis(const CycMat& m) {
    CycMat work = m.transpose();
    work.rref();
    // nonzero rows of the echelon form, transposed back
    std::vector<int> keep;
    for (int r = 0; r < work.rows(); ++r) {
        bool nz = false;
        for (int c = 0; c < work.cols(); ++c)
            if (!work.at(r, c).is_zero()) { nz = true; break; }
        if (nz) keep.push_back(r);
    }
    CycMat out(m.rows(), static_cast<int>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (int r = 0; r < m.rows(); ++r) out.at(r, static_cast<int>(k)) = work.at(keep[k], r);
    return out;
}

}  // namespace radford
