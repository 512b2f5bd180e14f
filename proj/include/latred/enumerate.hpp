#pragma once

#include <functional>
#include <utility>

#include "lll.hpp"

namespace latred {

namespace detail {

// Depth-first exact enumeration of ||R(y - s)||^2 <= budget over integer y,
// where R is the (LLL-reduced) basis and s a rational shift (zero for SVP).
// Levels run from the last column down; per level we walk outward from the
// rounded center in both directions, which needs no square roots.
//
// visit(y, val) is called at every leaf inside the budget; it may lower the
// budget by returning the new one.
class Enumerator {
  public:
    Enumerator(const Mat& reduced, RatVec shift)
        : n_(reduced.dim()), gso_(gram_schmidt(reduced)), shift_(std::move(shift)),
          coeff_(reduced.dim(), Int(0)) {}

    using Visit = std::function<Rat(const Vec&, const Rat&)>;

    void run(Rat budget, const Visit& visit) {
        budget_ = std::move(budget);
        visit_ = &visit;
        descend(static_cast<long>(n_) - 1, Rat(0));
    }

  private:
    Rat center_at(long level) const {
        Rat c = shift_[level];
        for (std::size_t i = level + 1; i < n_; ++i)
            c -= gso_.mu[i][level] * (Rat(coeff_[i]) - shift_[i]);
        return c;
    }

    void descend(long level, const Rat& partial) {
        if (level < 0) {
            Rat nb = (*visit_)(coeff_, partial);
            if (nb < budget_) budget_ = nb;
            return;
        }
        Rat center = center_at(level);
        const Rat& c = gso_.ortho_norm_sq[level];
        Int m0 = round_rat(center);
        for (Int y = m0;; ++y) {
            Rat d = Rat(y) - center;
            Rat term = partial + c * d * d;
            if (term > budget_) break;
            coeff_[level] = y;
            descend(level - 1, term);
        }
        for (Int y = m0 - 1;; --y) {
            Rat d = Rat(y) - center;
            Rat term = partial + c * d * d;
            if (term > budget_) break;
            coeff_[level] = y;
            descend(level - 1, term);
        }
        coeff_[level] = 0;
    }

    std::size_t n_;
    Gso gso_;
    RatVec shift_;
    Vec coeff_;
    Rat budget_;
    const Visit* visit_ = nullptr;
};

// Map coefficients w.r.t. the reduced basis back to the original basis.
inline Vec apply_transform(const Mat& u, const Vec& y) { return mat_vec(u, y); }

// Negate so the first nonzero coordinate is positive.
inline Vec canonical_sign(Vec x) {
    for (const Int& c : x) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& e : x) e = -e;
        break;
    }
    return x;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace detail

struct SvpSolution {
    Vec x;       // coefficient vector w.r.t. the input basis
    Int min_sq;  // lambda_1^2
};

// Exact shortest squared length plus a minimizing coefficient vector.
// Tie-break: among all minimizers, negate so the first nonzero coordinate
// is positive, then take the lexicographically smallest.
inline SvpSolution svp_search_enum(const Mat& B) {
    LllBasis lll = lll_reduce(B);
    std::size_t n = B.dim();

    Int best_sq = norm_sq(lll.reduced.col(0));
    Vec best_x;
    detail::Enumerator enumerate(lll.reduced, RatVec(n, Rat(0)));
    enumerate.run(Rat(best_sq), [&](const Vec& y, const Rat&) -> Rat {
        Int val = norm_sq(mat_vec(lll.reduced, y));
        if (val == 0) return Rat(best_sq);  // skip the zero vector
        if (best_x.empty() || val < best_sq) {
            best_sq = val;
            best_x = detail::canonical_sign(detail::apply_transform(lll.transform, y));
        } else if (val == best_sq) {
            Vec cand = detail::canonical_sign(detail::apply_transform(lll.transform, y));
            if (detail::lex_less(cand, best_x)) best_x = std::move(cand);
        }
        return Rat(best_sq);
    });
    return {std::move(best_x), std::move(best_sq)};
}

inline Int svp_opt_enum(const Mat& B) { return svp_search_enum(B).min_sq; }

// Solve B s = t exactly over the rationals.
inline RatVec solve_rational(const Mat& B, const Vec& t) {
    std::size_t n = B.dim();
    if (t.size() != n) throw ContractViolation("solve_rational: dimension mismatch");
    std::vector<RatVec> a(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(B.at(i, j));
        a[i][n] = Rat(t[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw ContractViolation("solve_rational: singular matrix");
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RatVec s(n);
    for (std::size_t k = 0; k < n; ++k) {
        s[k] = a[k][n] / a[k][k];
        s[k].canonicalize();
    }
    return s;
}

struct CvpSolution {
    Vec x;        // coefficient vector w.r.t. the input basis
    Int dist_sq;  // squared distance from t to the lattice
};

// Exact closest-vector search: Babai nearest-plane for the initial radius,
// then full enumeration around the target. The zero coefficient vector is a
// legal answer here.
inline CvpSolution cvp_search_enum(const Mat& B, const Vec& t) {
    LllBasis lll = lll_reduce(B);
    std::size_t n = B.dim();
    RatVec shift = solve_rational(lll.reduced, t);
    Gso g = gram_schmidt(lll.reduced);

    // Babai nearest plane in coefficient space.
    Vec babai(n, Int(0));
    for (long j = static_cast<long>(n) - 1; j >= 0; --j) {
        Rat c = shift[j];
        for (std::size_t i = j + 1; i < n; ++i)
            c -= g.mu[i][j] * (Rat(babai[i]) - shift[i]);
        babai[j] = round_rat(c);
    }
    Vec w0 = mat_vec(lll.reduced, babai);
    for (std::size_t i = 0; i < n; ++i) w0[i] -= t[i];
    Int best_sq = norm_sq(w0);
    Vec best_y = babai;

    detail::Enumerator enumerate(lll.reduced, shift);
    enumerate.run(Rat(best_sq), [&](const Vec& y, const Rat&) -> Rat {
        Vec d = mat_vec(lll.reduced, y);
        for (std::size_t i = 0; i < n; ++i) d[i] -= t[i];
        Int val = norm_sq(d);
        if (val < best_sq) {
            best_sq = val;
            best_y = y;
        }
        return Rat(best_sq);
    });
    return {detail::apply_transform(lll.transform, best_y), std::move(best_sq)};
}

inline Int cvp_opt_enum(const Mat& B, const Vec& t) { return cvp_search_enum(B, t).dist_sq; }

}  // namespace latred
