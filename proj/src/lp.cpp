#include "hirsch/lp.hpp"

#include <limits>

namespace hirsch {

namespace {

// Dictionary simplex over exact rationals. Free structural variables are
// split as x = u - w with u, w >= 0. Variable ids: 0..2d-1 structural,
// 2d..2d+m-1 slacks, 2d+m the phase-1 auxiliary.
//
// Dictionary invariant: basic_i = rhs_i + sum_j coef[i][j] * nonbasic_j.
class Dictionary {
  public:
    Dictionary(const RatMatrix& a, const RatVec& b, const RatVec& c)
        : m_(a.size()), d_(c.size()), n_(2 * c.size()) {
        basic_.resize(m_);
        coef_.assign(m_, RatVec(n_ + 1, 0));
        rhs_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            basic_[i] = static_cast<int>(n_ + i);
            for (std::size_t j = 0; j < d_; ++j) {
                coef_[i][2 * j] = -a[i][j];
                coef_[i][2 * j + 1] = a[i][j];
            }
            rhs_[i] = b[i];
        }
        nonbasic_.resize(n_ + 1);
        for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = static_cast<int>(j);
        nonbasic_[n_] = aux_id();  // phase-1 column, all-zero until activated
        obj_.assign(n_ + 1, 0);
        obj_const_ = 0;
        for (std::size_t j = 0; j < d_; ++j) {
            obj_[2 * j] = c[j];
            obj_[2 * j + 1] = -c[j];
        }
    }

    int aux_id() const { return static_cast<int>(n_ + m_); }

    bool primal_feasible() const {
        for (const auto& r : rhs_)
            if (r < 0) return false;
        return true;
    }

    // Phase 1: maximize -x0 with x0 entering on the most negative row.
    // Returns true when the original system is feasible.
    bool run_phase1() {
        if (primal_feasible()) return true;
        for (std::size_t i = 0; i < m_; ++i) coef_[i][n_] = 1;
        RatVec saved_obj = obj_;
        Rational saved_const = obj_const_;
        obj_.assign(n_ + 1, 0);
        obj_[n_] = -1;
        obj_const_ = 0;
        std::size_t worst = 0;
        for (std::size_t i = 1; i < m_; ++i)
            if (rhs_[i] < rhs_[worst]) worst = i;
        pivot(worst, n_);
        run_simplex();
        if (obj_const_ != 0) return false;
        // Drive the auxiliary out of the basis if it lingers at zero.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basic_[i] != aux_id()) continue;
            std::size_t col = 0;
            while (col <= n_ && coef_[i][col] == 0) ++col;
            if (col <= n_) pivot(i, col);
            break;
        }
        // Freeze the auxiliary at zero and restore the objective in terms of
        // the current nonbasic set.
        for (std::size_t col = 0; col <= n_; ++col) {
            if (nonbasic_[col] != aux_id()) continue;
            for (std::size_t i = 0; i < m_; ++i) coef_[i][col] = 0;
            break;
        }
        obj_.assign(n_ + 1, 0);
        obj_const_ = saved_const;
        for (std::size_t j = 0; j < n_; ++j) {
            if (saved_obj[j] == 0) continue;
            add_variable_to_objective(static_cast<int>(j), saved_obj[j]);
        }
        return true;
    }

    // Bland's rule simplex on the current dictionary; returns false when the
    // objective is unbounded above.
    bool run_simplex() {
        for (;;) {
            int enter_col = -1, enter_id = std::numeric_limits<int>::max();
            for (std::size_t j = 0; j <= n_; ++j) {
                if (obj_[j] > 0 && nonbasic_[j] < enter_id) {
                    enter_id = nonbasic_[j];
                    enter_col = static_cast<int>(j);
                }
            }
            if (enter_col < 0) return true;
            int leave_row = -1, leave_id = std::numeric_limits<int>::max();
            Rational best_bound = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (coef_[i][enter_col] >= 0) continue;
                Rational bound = rhs_[i] / -coef_[i][enter_col];
                if (leave_row < 0 || bound < best_bound ||
                    (bound == best_bound && basic_[i] < leave_id)) {
                    leave_row = static_cast<int>(i);
                    leave_id = basic_[i];
                    best_bound = bound;
                }
            }
            if (leave_row < 0) return false;
            pivot(static_cast<std::size_t>(leave_row), static_cast<std::size_t>(enter_col));
        }
    }

    Rational objective() const { return obj_const_; }

    RatVec structural_solution() const {
        RatVec split(n_ + m_ + 1, 0);
        for (std::size_t i = 0; i < m_; ++i) split[basic_[i]] = rhs_[i];
        RatVec x(d_);
        for (std::size_t j = 0; j < d_; ++j) x[j] = split[2 * j] - split[2 * j + 1];
        return x;
    }

  private:
    // obj += weight * (expression of variable id in the current dictionary)
    void add_variable_to_objective(int id, const Rational& weight) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basic_[i] != id) continue;
            obj_const_ += weight * rhs_[i];
            for (std::size_t j = 0; j <= n_; ++j) obj_[j] += weight * coef_[i][j];
            return;
        }
        for (std::size_t j = 0; j <= n_; ++j) {
            if (nonbasic_[j] == id) {
                obj_[j] += weight;
                return;
            }
        }
    }

    // Exchange basic_[row] with nonbasic_[col]; the leaving variable takes
    // over the vacated column.
    void pivot(std::size_t row, std::size_t col) {
        const Rational p = coef_[row][col];
        RatVec new_row(n_ + 1);
        for (std::size_t j = 0; j <= n_; ++j) new_row[j] = -coef_[row][j] / p;
        new_row[col] = Rational(1) / p;
        const Rational new_rhs = -rhs_[row] / p;
        std::swap(basic_[row], nonbasic_[col]);
        coef_[row] = std::move(new_row);
        rhs_[row] = new_rhs;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || coef_[i][col] == 0) continue;
            const Rational w = coef_[i][col];
            coef_[i][col] = 0;
            rhs_[i] += w * rhs_[row];
            for (std::size_t j = 0; j <= n_; ++j) coef_[i][j] += w * coef_[row][j];
        }
        if (obj_[col] != 0) {
            const Rational w = obj_[col];
            obj_[col] = 0;
            obj_const_ += w * rhs_[row];
            for (std::size_t j = 0; j <= n_; ++j) obj_[j] += w * coef_[row][j];
        }
    }

    std::size_t m_, d_, n_;
    std::vector<int> basic_;
    std::vector<int> nonbasic_;
    RatMatrix coef_;
    RatVec rhs_;
    RatVec obj_;
    Rational obj_const_;
};

}  // namespace

LpResult solve_lp(const RatMatrix& a, const RatVec& b, const RatVec& c) {
    Dictionary dict(a, b, c);
    if (!dict.run_phase1()) return {LpStatus::Infeasible, 0, {}};
    if (!dict.run_simplex()) return {LpStatus::Unbounded, 0, {}};
    return {LpStatus::Optimal, dict.objective(), dict.structural_solution()};
}

std::optional<RatVec> lp_feasible_point(const RatMatrix& a, const RatVec& b) {
    LpResult r = solve_lp(a, b, RatVec(a.empty() ? 0 : a[0].size(), 0));
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.x;
}

}  // namespace hirsch
