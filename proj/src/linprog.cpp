#include "ccw/linprog.hpp"

#include <cstddef>
#include <vector>

#include "ccw/errors.hpp"
#include "ccw/orbits.hpp"

namespace ccw {

bool lp_solver_built() {
#ifdef CCW_WITH_LP
    return true;
#else
    return false;
#endif
}

#ifdef CCW_WITH_LP

namespace {

// Dense exact simplex for  min c.y  s.t.  M y = d,  y >= 0.
// Bland's rule everywhere, so no cycling.  Sizes here are tiny (tens of
// rows), so the quadratic tableau updates are more than fast enough.
class SimplexTableau {
  public:
    SimplexTableau(std::vector<std::vector<Rational>> m, std::vector<Rational> d)
        : m_(std::move(m)), d_(std::move(d)), rows_(m_.size()), cols_(m_.empty() ? 0 : m_[0].size()) {
        // Make every right-hand side nonnegative.
        for (std::size_t r = 0; r < rows_; ++r) {
            if (d_[r] < 0) {
                d_[r] = -d_[r];
                for (auto& v : m_[r]) v = -v;
            }
        }
    }

    // Returns false iff the phase-1 optimum is nonzero (infeasible).
    bool solve_two_phase(const std::vector<Rational>& cost) {
        // Phase 1: append one artificial per row, basis = artificials.
        const std::size_t art0 = cols_;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t rr = 0; rr < rows_; ++rr) {
                m_[rr].push_back(rr == r ? Rational(1) : Rational(0));
            }
        }
        cols_ += rows_;
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) basis_[r] = art0 + r;

        std::vector<Rational> phase1(cols_, Rational(0));
        for (std::size_t j = art0; j < cols_; ++j) phase1[j] = 1;
        optimize(phase1);
        if (objective(phase1) != 0) return false;

        // Drive any artificial still basic out of the basis (or drop its
        // redundant row).
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < art0) continue;
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < art0; ++j) {
                if (m_[r][j] != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) {
                // Redundant constraint: zero the row by leaving the
                // artificial basic at value 0 (harmless for phase 2, since
                // its column never re-enters).
                continue;
            }
            pivot(r, enter);
        }

        // Phase 2 cost: original cost on structural columns, forbid
        // artificials by never letting them enter (their reduced costs are
        // forced up with a zero objective coefficient plus the guard in
        // optimize()).
        std::vector<Rational> full(cost);
        full.resize(cols_, Rational(0));
        art_floor_ = art0;
        optimize(full);
        return true;
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational v = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < cost.size()) v += cost[basis_[r]] * d_[r];
        }
        return v;
    }

    std::vector<Rational> solution(std::size_t nvars) const {
        std::vector<Rational> x(nvars, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < nvars) x[basis_[r]] = d_[r];
        }
        return x;
    }

  private:
    void optimize(const std::vector<Rational>& cost) {
        for (;;) {
            // Reduced costs via the basic-cost combination of each column.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (art_floor_ != 0 && j >= art_floor_) break;  // artificials barred
                bool basic = false;
                for (std::size_t r = 0; r < rows_; ++r) {
                    if (basis_[r] == j) {
                        basic = true;
                        break;
                    }
                }
                if (basic) continue;
                Rational red = cost[j];
                for (std::size_t r = 0; r < rows_; ++r) {
                    red -= cost[basis_[r]] * m_[r][j];
                }
                if (red < 0) {
                    enter = j;  // Bland: first improving column
                    break;
                }
            }
            if (enter == cols_) return;  // optimal

            // Ratio test; Bland tie-break on the smallest basis index.
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (m_[r][enter] <= 0) continue;
                const Rational ratio = d_[r] / m_[r][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows_) {
                throw Error("simplex: objective unbounded below (malformed program)");
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        const Rational p = m_[r][j];
        for (auto& v : m_[r]) v /= p;
        d_[r] /= p;
        for (std::size_t rr = 0; rr < rows_; ++rr) {
            if (rr == r || m_[rr][j] == 0) continue;
            const Rational f = m_[rr][j];
            for (std::size_t cc = 0; cc < cols_; ++cc) m_[rr][cc] -= f * m_[r][cc];
            d_[rr] -= f * d_[r];
        }
        basis_[r] = j;
    }

    std::vector<std::vector<Rational>> m_;
    std::vector<Rational> d_;
    std::size_t rows_, cols_;
    std::vector<std::size_t> basis_;
    std::size_t art_floor_ = 0;
};

}  // namespace

ChebyshevResult min_sup_norm_over_coboundaries(const CochainVector& f) {
    const int q = f.degree();
    if (q < 1) throw SizeLimit("min_sup_norm_over_coboundaries: degree must be >= 1");
    const Mode mode = f.mode();
    const Matrix delta = delta_matrix(q - 1, mode);
    const std::size_t nrows = f.basis_size();
    const std::size_t k = delta.empty() ? basis(q - 1, mode).size() : delta[0].size();

    // Variables y = (b+, b-, t, slacks...), all >= 0 (the sup norm t is
    // intrinsically nonnegative), with
    //   (M (b+ - b-))_r - t + s1_r = -f_r      (i.e.  (Mb)_r - t <= -f_r)
    //  -(M (b+ - b-))_r - t + s2_r =  f_r      (i.e. -(Mb)_r - t <=  f_r).
    const std::size_t nb = 2 * k + 1;
    const std::size_t nslack = 2 * nrows;
    std::vector<std::vector<Rational>> m(2 * nrows,
                                         std::vector<Rational>(nb + nslack, Rational(0)));
    std::vector<Rational> d(2 * nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& a = delta[r][j];
            m[2 * r][j] = a;
            m[2 * r][k + j] = -a;
            m[2 * r + 1][j] = -a;
            m[2 * r + 1][k + j] = a;
        }
        m[2 * r][2 * k] = -1;
        m[2 * r + 1][2 * k] = -1;
        m[2 * r][nb + 2 * r] = 1;
        m[2 * r + 1][nb + 2 * r + 1] = 1;
        d[2 * r] = -f.coeff(r);
        d[2 * r + 1] = f.coeff(r);
    }

    std::vector<Rational> cost(nb + nslack, Rational(0));
    cost[2 * k] = 1;

    SimplexTableau tableau(std::move(m), std::move(d));
    if (!tableau.solve_two_phase(cost)) {
        throw Error("min_sup_norm_over_coboundaries: infeasible program (impossible)");
    }
    const auto y = tableau.solution(nb);

    ChebyshevResult result{y[2 * k], CochainVector(q - 1, mode)};
    for (std::size_t j = 0; j < k; ++j) result.minimizer.coeff(j) = y[j] - y[k + j];
    return result;
}

#else  // !CCW_WITH_LP

ChebyshevResult min_sup_norm_over_coboundaries(const CochainVector&) {
    throw SolverNotBuilt(
        "min_sup_norm_over_coboundaries: rebuild with -DCCW_WITH_LP=ON for the exact "
        "Chebyshev solver");
}

#endif

}  // namespace ccw
