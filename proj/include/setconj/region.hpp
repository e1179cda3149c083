#pragma once

#include <vector>

#include "setconj/fourier_motzkin.hpp"
#include "setconj/lp.hpp"
#include "setconj/polyhedron.hpp"

namespace setconj {

// A finite union of polyhedra over one ambient space.  The empty vector is
// the empty set.  Pieces may overlap; all comparisons go through exact
// emptiness tests, so no canonical union form is needed.
using Region = std::vector<Polyhedron>;

inline Region region_whole(std::size_t dim) { return {Polyhedron::whole_space(dim)}; }

inline bool region_contains(const Region& a, const RatVec& v) {
    for (const auto& p : a)
        if (p.contains(v)) return true;
    return false;
}

inline bool region_is_empty_set(const Region& a) {
    for (const auto& p : a)
        if (!is_empty(p)) return false;
    return true;
}

// Drops empty pieces and pieces covered by a single other piece.
inline Region region_normalize(Region a) {
    Region live;
    for (auto& p : a)
        if (!is_empty(p)) live.push_back(tidy(p));
    // Absorption: q covers p iff p violates none of q's halfspaces.
    auto covered_by = [](const Polyhedron& p, const Polyhedron& q) {
        for (const auto& c : q.constraints)
            if (!is_empty(p.with(c.negated()))) return false;
        return true;
    };
    Region out;
    for (std::size_t i = 0; i < live.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < live.size() && !drop; ++j) {
            if (i == j) continue;
            if (covered_by(live[i], live[j]) && !(j > i && covered_by(live[j], live[i])))
                drop = true;
        }
        if (!drop) out.push_back(live[i]);
    }
    return out;
}

// Complement of one polyhedron as disjoint pieces: the i-th piece satisfies
// the first i-1 constraints and violates the i-th.
inline Region complement(const Polyhedron& p) {
    Region out;
    Polyhedron prefix(p.dim);
    for (const auto& c : p.constraints) {
        Polyhedron piece = prefix.with(c.negated());
        if (!is_empty(piece)) out.push_back(std::move(piece));
        prefix.constraints.push_back(c);
    }
    return out;
}

// a minus one polyhedron.
inline Region subtract_piece(const Polyhedron& a, const Polyhedron& b,
                             std::size_t budget = 100000) {
    Region out;
    Polyhedron prefix = a;
    for (const auto& c : b.constraints) {
        Polyhedron piece = prefix.with(c.negated());
        if (!is_empty(piece)) out.push_back(std::move(piece));
        if (out.size() > budget) throw ResourceLimitError("region subtraction budget exceeded");
        prefix.constraints.push_back(c);
    }
    return out;
}

inline Region region_subtract(const Region& a, const Region& b, std::size_t budget = 100000) {
    Region work = a;
    for (const auto& bp : b) {
        Region next;
        for (const auto& wp : work) {
            Region parts = subtract_piece(wp, bp, budget);
            next.insert(next.end(), parts.begin(), parts.end());
            if (next.size() > budget) throw ResourceLimitError("region subtraction budget exceeded");
        }
        work = std::move(next);
        if (work.empty()) break;
    }
    return work;
}

inline Region region_complement(const Region& a, std::size_t dim, std::size_t budget = 100000) {
    return region_subtract(region_whole(dim), a, budget);
}

inline Region region_intersect(const Region& a, const Region& b) {
    Region out;
    for (const auto& pa : a)
        for (const auto& pb : b) {
            Polyhedron q = intersect(pa, pb);
            if (!is_empty(q)) out.push_back(std::move(q));
        }
    return out;
}

inline Region region_union(const Region& a, const Region& b) {
    Region out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// The membership oracle: exact subset test for unions, by strict-complement
// decomposition plus emptiness certificates.
inline bool region_is_subset(const Region& a, const Region& b) {
    for (const auto& p : a) {
        if (is_empty(p)) continue;
        if (region_is_empty_set(region_subtract({p}, b))) continue;
        return false;
    }
    return true;
}

inline bool region_equal(const Region& a, const Region& b) {
    return region_is_subset(a, b) && region_is_subset(b, a);
}

inline Region region_negate(const Region& a) {
    Region out;
    for (const auto& p : a) out.push_back(negate_set(p));
    return out;
}

inline Region region_translate(const Region& a, const RatVec& shift) {
    Region out;
    for (const auto& p : a) out.push_back(translate(p, shift));
    return out;
}

inline Region region_scale(const Rat& t, const Region& a) {
    Region out;
    for (const auto& p : a) out.push_back(scale_set(t, p));
    return out;
}

// Exact Minkowski sum of one polyhedron pair via the lifted system
// {(s,u) : u in a, s-u in b}, eliminating u.  Strict faces propagate.
inline Polyhedron minkowski_pieces(const Polyhedron& a, const Polyhedron& b,
                                   const FmOptions& opt = {}) {
    if (a.dim != b.dim) throw ContractViolation("minkowski: dimension mismatch");
    std::size_t d = a.dim;
    Polyhedron lifted(2 * d);
    for (const auto& c : a.constraints) {
        RatVec n(2 * d);
        for (std::size_t i = 0; i < d; ++i) n[d + i] = c.normal[i];
        lifted.constraints.push_back(Constraint{std::move(n), c.bound, c.strict});
    }
    for (const auto& c : b.constraints) {
        RatVec n(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            n[i] = c.normal[i];
            n[d + i] = -c.normal[i];
        }
        lifted.constraints.push_back(Constraint{std::move(n), c.bound, c.strict});
    }
    std::vector<std::size_t> keep(d);
    for (std::size_t i = 0; i < d; ++i) keep[i] = i;
    return project(lifted, keep, opt);
}

inline Region region_minkowski(const Region& a, const Region& b, const FmOptions& opt = {}) {
    Region out;
    for (const auto& pa : a) {
        if (is_empty(pa)) continue;
        for (const auto& pb : b) {
            if (is_empty(pb)) continue;
            out.push_back(minkowski_pieces(pa, pb, opt));
        }
    }
    return region_normalize(std::move(out));
}

// Projection of every piece onto the kept coordinates.
inline Region region_project(const Region& a, const std::vector<std::size_t>& keep,
                             const FmOptions& opt = {}) {
    Region out;
    for (const auto& p : a) {
        Polyhedron q = project(p, keep, opt);
        if (!is_empty(q)) out.push_back(std::move(q));
    }
    return out;
}

} // namespace setconj
