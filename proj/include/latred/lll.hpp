#pragma once

#include <cstddef>
#include <utility>

#include "linalg.hpp"

namespace latred {

struct LllBasis {
    Mat reduced;    // same lattice as the input
    Mat transform;  // unimodular, reduced = input * transform
};

namespace detail {

// Recomputing the GSO from scratch after every change is fine here:
// dimensions stay tiny, only the entries are huge.
inline void size_reduce_col(Mat& b, Mat& u, Gso& g, std::size_t k, std::size_t j) {
    Int r = round_rat(g.mu[k][j]);
    if (r == 0) return;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        b.at(i, k) -= r * b.at(i, j);
        u.at(i, k) -= r * u.at(i, j);
    }
}

}  // namespace detail

// Exact integral LLL with delta = 3/4 on the rational GSO. Returns a
// size-reduced, Lovasz-reduced basis of the same lattice plus the
// unimodular transform that produced it.
inline LllBasis lll_reduce(const Mat& B) {
    std::size_t n = B.dim();
    Mat b = B;
    Mat u = Mat::identity(n);
    if (det_bareiss(B) == 0) throw ContractViolation("lll_reduce: singular basis");

    const Rat delta(3, 4);
    Gso g = gram_schmidt(b);
    std::size_t k = 1;
    while (k < n) {
        detail::size_reduce_col(b, u, g, k, k - 1);
        g = gram_schmidt(b);
        Rat lhs = g.ortho_norm_sq[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.ortho_norm_sq[k - 1];
        if (lhs < rhs) {
            std::swap(b.col(k), b.col(k - 1));
            std::swap(u.col(k), u.col(k - 1));
            g = gram_schmidt(b);
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (std::size_t j = k - 1; j-- > 0;) detail::size_reduce_col(b, u, g, k, j);
            g = gram_schmidt(b);
            ++k;
        }
    }
    return {std::move(b), std::move(u)};
}

}  // namespace latred
