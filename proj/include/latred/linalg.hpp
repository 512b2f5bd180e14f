#pragma once

#include <cstddef>
#include <vector>

#include "ints.hpp"

namespace latred {

using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Square integer matrix, column-major: columns are the lattice generators.
class Mat {
  public:
    Mat() = default;
    explicit Mat(std::size_t n) : n_(n), cols_(n, Vec(n, Int(0))) {
        if (n == 0) throw ContractViolation("matrix dimension must be >= 1");
    }

    static Mat identity(std::size_t n) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m.cols_[i][i] = 1;
        return m;
    }

    // rows[i][j] = entry in row i, column j
    static Mat from_rows(const std::vector<Vec>& rows) {
        std::size_t n = rows.size();
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw ContractViolation("matrix must be square");
            for (std::size_t j = 0; j < n; ++j) m.cols_[j][i] = rows[i][j];
        }
        return m;
    }

    std::size_t dim() const { return n_; }

    Vec& col(std::size_t j) { return cols_[j]; }
    const Vec& col(std::size_t j) const { return cols_[j]; }

    Int& at(std::size_t i, std::size_t j) { return cols_[j][i]; }
    const Int& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }

    bool operator==(const Mat& o) const { return cols_ == o.cols_; }

  private:
    std::size_t n_ = 0;
    std::vector<Vec> cols_;
};

inline Vec mat_vec(const Mat& B, const Vec& x) {
    std::size_t n = B.dim();
    if (x.size() != n) throw ContractViolation("mat_vec: dimension mismatch");
    Vec y(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) y[i] += B.at(i, j) * x[j];
    return y;
}

inline Int norm_sq(const Vec& v) {
    Int s = 0;
    for (const Int& c : v) s += c * c;
    return s;
}

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ContractViolation("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int max_abs_entry(const Mat& B) {
    Int m = 0;
    for (std::size_t j = 0; j < B.dim(); ++j)
        for (std::size_t i = 0; i < B.dim(); ++i)
            if (Int a = abs(B.at(i, j)); a > m) m = a;
    return m;
}

// Bareiss fraction-free elimination; exact determinant with polynomial
// bit-growth, which matters once entries have thousands of digits.
inline Int det_bareiss(const Mat& B) {
    std::size_t n = B.dim();
    std::vector<Vec> a(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = B.at(i, j);

    Int prev = 1;
    int sign_flips = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign_flips = -sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign_flips * a[n - 1][n - 1];
}

// Exact Gram-Schmidt data for the columns of B:
//   b_j = ortho[j] + sum_{i<j} mu[j][i] * ortho[i]
struct Gso {
    std::vector<RatVec> ortho;       // orthogonalized columns
    std::vector<RatVec> mu;          // mu[j][i], i < j
    RatVec ortho_norm_sq;            // ||b*_j||^2
};

inline Gso gram_schmidt(const Mat& B) {
    std::size_t n = B.dim();
    Gso g;
    g.ortho.assign(n, RatVec(n));
    g.mu.assign(n, RatVec(n, Rat(0)));
    g.ortho_norm_sq.assign(n, Rat(0));

    for (std::size_t j = 0; j < n; ++j) {
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Rat(B.at(i, j));
        for (std::size_t k = 0; k < j; ++k) {
            Rat num = 0;
            for (std::size_t i = 0; i < n; ++i) num += Rat(B.at(i, j)) * g.ortho[k][i];
            Rat m = num / g.ortho_norm_sq[k];
            m.canonicalize();
            g.mu[j][k] = m;
            for (std::size_t i = 0; i < n; ++i) v[i] -= m * g.ortho[k][i];
        }
        Rat ns = 0;
        for (std::size_t i = 0; i < n; ++i) ns += v[i] * v[i];
        ns.canonicalize();
        if (ns == 0) throw ContractViolation("gram_schmidt: dependent columns");
        for (auto& c : v) c.canonicalize();
        g.ortho[j] = std::move(v);
        g.ortho_norm_sq[j] = ns;
        g.mu[j][j] = 1;
    }
    return g;
}

}  // namespace latred
