#pragma once

#include <algorithm>
#include <vector>

#include "setconj/fourier_motzkin.hpp"
#include "setconj/linalg.hpp"
#include "setconj/lp.hpp"
#include "setconj/polyhedron.hpp"

namespace setconj {

// Canonical H-form.  For closed polyhedra the output is a complete set
// invariant: two inputs canonicalize to literally equal data iff they denote
// the same point set.  The recipe: detect the affine hull (implicit
// equalities), emit its RREF rows as ordered equality pairs, reduce every
// other constraint modulo that row space, then strip LP-redundant rows and
// sort.  Strict systems are normalized the same way without the uniqueness
// promise (unions of strict pieces are compared by the membership oracle
// instead).
inline Polyhedron canonicalize(const Polyhedron& p) {
    if (is_empty(p)) return Polyhedron::empty(p.dim);
    Polyhedron work = tidy(p);
    Polyhedron relaxed = work.relaxed();

    // Implicit equalities: <n,x> <= b is one iff min over cl(P) equals b.
    std::vector<RatVec> eq_rows;  // [normal | bound]
    std::vector<Constraint> inequalities;
    for (const auto& c : work.constraints) {
        bool equality = false;
        if (!c.strict) {
            LpResult lo = lp_solve(c.normal, relaxed, LpSense::Min);
            equality = lo.status == LpStatus::Optimal && lo.value == c.bound;
        }
        if (equality) {
            RatVec row = c.normal;
            row.push_back(c.bound);
            eq_rows.push_back(std::move(row));
        } else {
            inequalities.push_back(c);
        }
    }

    Rref eq = rref(std::move(eq_rows), p.dim);

    // Reduce inequality normals modulo the equality row space, zeroing the
    // pivot columns, so each facet has one representative.
    std::vector<Constraint> reduced;
    for (auto c : inequalities) {
        for (std::size_t i = 0; i < eq.pivot_cols.size(); ++i) {
            const Rat& f = c.normal[eq.pivot_cols[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < p.dim; ++j) c.normal[j] -= f * eq.rows[i][j];
            c.bound -= f * eq.rows[i][p.dim];
        }
        if (is_zero_vec(c.normal)) continue;  // implied by the affine hull
        reduced.push_back(c.normalized());
    }

    Polyhedron out(p.dim);
    for (std::size_t i = 0; i < eq.rows.size(); ++i) {
        RatVec n(eq.rows[i].begin(), eq.rows[i].begin() + static_cast<std::ptrdiff_t>(p.dim));
        Rat b = eq.rows[i][p.dim];
        Constraint fwd = Constraint{n, b, false}.normalized();
        Constraint bwd = Constraint{vec_neg(fwd.normal), -fwd.bound, false};
        out.constraints.push_back(std::move(fwd));
        out.constraints.push_back(std::move(bwd));
    }
    for (auto& c : reduced) out.constraints.push_back(std::move(c));
    out = tidy(out);
    out = remove_redundant(std::move(out));
    std::sort(out.constraints.begin(), out.constraints.end(), constraint_less);
    return out;
}

// Set equality of closed polyhedra via the canonical form.
inline bool canonical_equal(const Polyhedron& a, const Polyhedron& b) {
    return canonicalize(a) == canonicalize(b);
}

// Topological closure: relax nonempty systems, collapse empty ones.
inline Polyhedron closure(const Polyhedron& p) {
    if (is_empty(p)) return Polyhedron::empty(p.dim);
    return p.relaxed();
}

} // namespace setconj
