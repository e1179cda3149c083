#pragma once

#include <optional>
#include <vector>

#include "setconj/extended_real.hpp"
#include "setconj/polyhedron.hpp"

namespace setconj {

enum class LpSense { Max, Min };
enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;     // meaningful for Optimal
    RatVec point;  // attaining point, satisfies all relaxed constraints
};

namespace detail {

// Dense rational tableau simplex.  Bland's rule for both the entering and
// leaving choice, so every run terminates.
class Simplex {
public:
    // rows_in: equality rows over nvars structural columns, rhs >= 0 required
    // by the caller; basis_in: one basic column per row (identity columns).
    Simplex(std::vector<RatVec> rows, std::vector<std::size_t> basis, std::size_t nvars)
        : rows_(std::move(rows)), basis_(std::move(basis)), nvars_(nvars), eligible_(nvars) {}

    // Columns at or past `col` may no longer enter the basis (used to retire
    // phase-one artificials).
    void ban_columns_from(std::size_t col) { eligible_ = col; }

    // Maximizes sum(c[j] x[j]); returns false when unbounded.
    bool maximize(const RatVec& c) {
        obj_ = c;
        obj_.push_back(0);
        // Canonicalize the objective row against the current basis.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& cb = obj_[basis_[i]];
            if (cb == 0) continue;
            Rat f = cb;
            for (std::size_t j = 0; j <= nvars_; ++j) obj_[j] -= f * rows_[i][j];
        }
        for (;;) {
            std::size_t enter = eligible_;
            for (std::size_t j = 0; j < eligible_; ++j)
                if (obj_[j] > 0) { enter = j; break; }
            if (enter == eligible_) return true;
            std::size_t leave = rows_.size();
            Rat best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i][nvars_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    Rat objective_value() const { return -obj_[nvars_]; }

    RatVec basic_solution() const {
        RatVec x(nvars_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < nvars_) x[basis_[i]] = rows_[i][nvars_];
        return x;
    }

    const std::vector<std::size_t>& basis() const { return basis_; }

    // Pivots variable `col` out of the basis if possible; drops the row when
    // it is entirely zero outside `avoid` columns (a redundant constraint).
    void drive_out(std::size_t row, std::size_t first_avoided_col) {
        for (std::size_t j = 0; j < first_avoided_col; ++j) {
            if (rows_[row][j] != 0) {
                pivot(row, j);
                return;
            }
        }
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    }

    std::size_t row_count() const { return rows_.size(); }

private:
    void pivot(std::size_t r, std::size_t c) {
        Rat inv = Rat(1) / rows_[r][c];
        for (auto& x : rows_[r]) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rat f = rows_[i][c];
            for (std::size_t j = 0; j <= nvars_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        if (!obj_.empty() && obj_[c] != 0) {
            Rat f = obj_[c];
            for (std::size_t j = 0; j <= nvars_; ++j) obj_[j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    std::vector<RatVec> rows_;
    RatVec obj_;
    std::vector<std::size_t> basis_;
    std::size_t nvars_;
    std::size_t eligible_;
};

} // namespace detail

// Exact LP over the relaxed polyhedron (strict flags dropped): variables are
// free, split internally as x = u - w.  The trichotomy is exact; the
// attaining point satisfies every non-strict constraint.
inline LpResult lp_solve(const RatVec& objective, const Polyhedron& p, LpSense sense) {
    if (objective.size() != p.dim) throw ContractViolation("lp_solve: objective dimension mismatch");
    const std::size_t n = p.dim;
    const std::size_t m = p.constraints.size();

    if (m == 0) {
        // Whole space: bounded only for the zero objective.
        LpResult r;
        if (is_zero_vec(objective)) {
            r.status = LpStatus::Optimal;
            r.value = 0;
            r.point = RatVec(n);
        } else {
            r.status = LpStatus::Unbounded;
        }
        return r;
    }

    // Columns: u(0..n-1), w(n..2n-1), slack(2n..2n+m-1), artificials after.
    std::size_t slack0 = 2 * n;
    std::size_t art0 = slack0 + m;
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (p.constraints[i].bound < 0) art_rows.push_back(i);
    std::size_t nvars = art0 + art_rows.size();

    std::vector<RatVec> rows(m, RatVec(nvars + 1));
    std::vector<std::size_t> basis(m);
    std::size_t next_art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = p.constraints[i];
        bool flip = c.bound < 0;
        Rat sgn = flip ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = sgn * c.normal[j];
            rows[i][n + j] = -sgn * c.normal[j];
        }
        rows[i][slack0 + i] = sgn;
        rows[i][nvars] = sgn * c.bound;
        if (flip) {
            rows[i][next_art] = 1;
            basis[i] = next_art++;
        } else {
            basis[i] = slack0 + i;
        }
    }

    detail::Simplex sx(std::move(rows), std::move(basis), nvars);

    if (!art_rows.empty()) {
        RatVec phase1(nvars);
        for (std::size_t j = art0; j < nvars; ++j) phase1[j] = -1;
        sx.maximize(phase1);
        if (sx.objective_value() != 0) {
            LpResult r;
            r.status = LpStatus::Infeasible;
            return r;
        }
        for (std::size_t i = 0; i < sx.row_count();) {
            if (sx.basis()[i] >= art0)
                sx.drive_out(i, art0);
            else
                ++i;
        }
        sx.ban_columns_from(art0);
    }

    RatVec phase2(nvars);
    Rat sgn = sense == LpSense::Max ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = sgn * objective[j];
        phase2[n + j] = -sgn * objective[j];
    }
    if (!sx.maximize(phase2)) {
        LpResult r;
        r.status = LpStatus::Unbounded;
        return r;
    }

    LpResult r;
    r.status = LpStatus::Optimal;
    r.value = sgn * sx.objective_value();
    RatVec full = sx.basic_solution();
    r.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) r.point[j] = full[j] - full[n + j];
    return r;
}

// Exact emptiness, honoring strict flags.  A system with strict rows is
// nonempty iff slack eps > 0 fits between every strict row and its bound.
inline bool is_empty(const Polyhedron& p) {
    if (!p.has_strict()) {
        RatVec zero(p.dim);
        return lp_solve(zero, p, LpSense::Max).status == LpStatus::Infeasible;
    }
    Polyhedron q(p.dim + 1);
    for (const auto& c : p.constraints) {
        RatVec n = c.normal;
        n.push_back(c.strict ? 1 : 0);
        q.constraints.push_back(Constraint{std::move(n), c.bound, false});
    }
    RatVec cap(p.dim + 1);
    cap.back() = 1;
    q.constraints.push_back(Constraint{cap, Rat(1), false});
    LpResult r = lp_solve(cap, q, LpSense::Max);
    return r.status != LpStatus::Optimal || r.value <= 0;
}

// Point satisfying all constraints including strict ones.  Contract: p nonempty.
inline RatVec witness_point(const Polyhedron& p) {
    Polyhedron q(p.dim + 1);
    for (const auto& c : p.constraints) {
        RatVec n = c.normal;
        n.push_back(c.strict ? 1 : 0);
        q.constraints.push_back(Constraint{std::move(n), c.bound, false});
    }
    RatVec cap(p.dim + 1);
    cap.back() = 1;
    q.constraints.push_back(Constraint{cap, Rat(1), false});
    RatVec low(p.dim + 1);
    low.back() = -1;
    q.constraints.push_back(Constraint{low, Rat(0), false});
    LpResult r = lp_solve(cap, q, LpSense::Max);
    if (r.status != LpStatus::Optimal || r.value <= 0)
        throw ContractViolation("witness_point on empty polyhedron");
    r.point.pop_back();
    return r.point;
}

// sup of <objective, .> over p as an extended real (honors strict-empty).
inline ExtReal support_value(const RatVec& objective, const Polyhedron& p) {
    if (is_empty(p)) return ExtReal::neg_inf();
    LpResult r = lp_solve(objective, p, LpSense::Max);
    if (r.status == LpStatus::Unbounded) return ExtReal::pos_inf();
    return ExtReal(r.value);
}

// Whether sup <objective,.> = value is attained within p (strict-aware).
inline bool support_attained(const RatVec& objective, const Rat& value, const Polyhedron& p) {
    Polyhedron q = p;
    q.constraints.push_back(Constraint{objective, value, false});
    q.constraints.push_back(Constraint{vec_neg(objective), -value, false});
    return !is_empty(q);
}

// Optimal solution that is lexicographically smallest among all optima.
// Deterministic tie-break used wherever a single witness must be reported.
inline LpResult lp_solve_lex(const RatVec& objective, const Polyhedron& p, LpSense sense) {
    LpResult first = lp_solve(objective, p, sense);
    if (first.status != LpStatus::Optimal) return first;
    Polyhedron q = p;
    q.constraints.push_back(Constraint{objective, first.value, false});
    q.constraints.push_back(Constraint{vec_neg(objective), -first.value, false});
    RatVec pt(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        RatVec e(p.dim);
        e[i] = 1;
        LpResult step = lp_solve(e, q, LpSense::Min);
        if (step.status != LpStatus::Optimal) return first;  // unbounded coordinate: keep basic point
        pt[i] = step.value;
        q.constraints.push_back(Constraint{e, step.value, false});
        q.constraints.push_back(Constraint{vec_neg(e), -step.value, false});
    }
    first.point = pt;
    return first;
}

} // namespace setconj
