#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "setconj/rational.hpp"

namespace setconj {

// One linear inequality <normal, v> <= bound, or strict < when `strict`.
struct Constraint {
    RatVec normal;
    Rat bound;
    bool strict = false;

    bool operator==(const Constraint&) const = default;

    bool satisfied_by(const RatVec& v) const {
        Rat lhs = dot(normal, v);
        return strict ? lhs < bound : lhs <= bound;
    }

    // Complement halfspace: not(n.v <= b) is -n.v < -b, not(n.v < b) is -n.v <= -b.
    Constraint negated() const { return Constraint{vec_neg(normal), -bound, !strict}; }

    Constraint relaxed() const { return Constraint{normal, bound, false}; }

    // Unique positively-scaled representative (integer, coprime).
    Constraint normalized() const {
        RatVec joint = normal;
        joint.push_back(bound);
        joint = scale_to_coprime(joint);
        Rat b = joint.back();
        joint.pop_back();
        return Constraint{std::move(joint), std::move(b), strict};
    }
};

inline bool constraint_less(const Constraint& a, const Constraint& b) {
    int c = lex_compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.strict < b.strict;
}

// Finite system of rational linear constraints in a fixed ambient dimension.
// An empty constraint list denotes the whole space.  Values are immutable in
// spirit: every operation returns a fresh polyhedron.
struct Polyhedron {
    std::size_t dim = 0;
    std::vector<Constraint> constraints;

    Polyhedron() = default;
    explicit Polyhedron(std::size_t d) : dim(d) {}
    Polyhedron(std::size_t d, std::vector<Constraint> cs) : dim(d), constraints(std::move(cs)) {
        for (const auto& c : constraints)
            if (c.normal.size() != dim) throw ContractViolation("constraint dimension mismatch");
    }

    bool operator==(const Polyhedron&) const = default;

    static Polyhedron whole_space(std::size_t d) { return Polyhedron(d); }

    // Designated empty form: the single unsatisfiable constraint 0 <= -1.
    static Polyhedron empty(std::size_t d) {
        return Polyhedron(d, {Constraint{RatVec(d), Rat(-1), false}});
    }

    bool is_designated_empty() const {
        return constraints.size() == 1 && is_zero_vec(constraints[0].normal) &&
               constraints[0].bound == -1 && !constraints[0].strict;
    }

    bool contains(const RatVec& v) const {
        if (v.size() != dim) throw ContractViolation("membership: point dimension mismatch");
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const Constraint& c) { return c.satisfied_by(v); });
    }

    bool has_strict() const {
        return std::any_of(constraints.begin(), constraints.end(),
                           [](const Constraint& c) { return c.strict; });
    }

    // All strict flags dropped.  This equals the topological closure whenever
    // the polyhedron is nonempty; callers wanting true closure must handle
    // the empty case first.
    Polyhedron relaxed() const {
        Polyhedron p(dim);
        p.constraints.reserve(constraints.size());
        for (const auto& c : constraints) p.constraints.push_back(c.relaxed());
        return p;
    }

    Polyhedron with(Constraint c) const {
        Polyhedron p = *this;
        p.constraints.push_back(std::move(c));
        return p;
    }

    // True iff `d` is a recession direction; exact for nonempty polyhedra.
    bool admits_direction(const RatVec& d) const {
        for (const auto& c : constraints)
            if (dot(c.normal, d) > 0) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "{dim=" + std::to_string(dim);
        for (const auto& c : constraints)
            s += "; " + setconj::to_string(c.normal) + (c.strict ? " < " : " <= ") +
                 setconj::to_string(c.bound);
        return s + "}";
    }
};

// Intersection by constraint concatenation.
inline Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim != b.dim) throw ContractViolation("intersect: dimension mismatch");
    Polyhedron p = a;
    p.constraints.insert(p.constraints.end(), b.constraints.begin(), b.constraints.end());
    return p;
}

// Pointwise image under v -> -v.
inline Polyhedron negate_set(const Polyhedron& p) {
    Polyhedron q(p.dim);
    for (const auto& c : p.constraints)
        q.constraints.push_back(Constraint{vec_neg(c.normal), c.bound, c.strict});
    return q;
}

// Pointwise image under v -> v + shift.
inline Polyhedron translate(const Polyhedron& p, const RatVec& shift) {
    Polyhedron q(p.dim);
    for (const auto& c : p.constraints)
        q.constraints.push_back(Constraint{c.normal, c.bound + dot(c.normal, shift), c.strict});
    return q;
}

// Pointwise image under v -> t v for t != 0 (exact; preserves strictness).
inline Polyhedron scale_set(const Rat& t, const Polyhedron& p) {
    if (t == 0) throw ContractViolation("scale_set: zero factor");
    Polyhedron q(p.dim);
    for (const auto& c : p.constraints) {
        // v in tP  iff  v/t in P; fold 1/t into the normal, flip on negative t.
        RatVec n = vec_scale(Rat(1) / t, c.normal);
        if (t > 0)
            q.constraints.push_back(Constraint{std::move(n), c.bound, c.strict});
        else
            q.constraints.push_back(Constraint{vec_neg(n), -c.bound, c.strict});
    }
    return q;
}

// Preimage {x : Mx + shift in p}; M maps dim_in -> p.dim.
inline Polyhedron preimage(const Polyhedron& p, const RatMatrix& m, const RatVec& shift) {
    if (m.rows != p.dim) throw ContractViolation("preimage: shape mismatch");
    Polyhedron q(m.cols);
    for (const auto& c : p.constraints) {
        RatVec n = m.apply_transposed(c.normal);
        q.constraints.push_back(Constraint{std::move(n), c.bound - dot(c.normal, shift), c.strict});
    }
    return q;
}

// Embeds p into a larger space: coordinates of p land at positions
// [offset, offset + p.dim), everything else unconstrained.
inline Polyhedron embed(const Polyhedron& p, std::size_t total_dim, std::size_t offset) {
    if (offset + p.dim > total_dim) throw ContractViolation("embed: out of range");
    Polyhedron q(total_dim);
    for (const auto& c : p.constraints) {
        RatVec n(total_dim);
        for (std::size_t i = 0; i < p.dim; ++i) n[offset + i] = c.normal[i];
        q.constraints.push_back(Constraint{std::move(n), c.bound, c.strict});
    }
    return q;
}

// Substitutes coordinates [pos, pos + values.size()) with fixed values,
// producing a polyhedron over the remaining coordinates (order preserved).
inline Polyhedron substitute(const Polyhedron& p, std::size_t pos, const RatVec& values) {
    if (pos + values.size() > p.dim) throw ContractViolation("substitute: out of range");
    Polyhedron q(p.dim - values.size());
    for (const auto& c : p.constraints) {
        RatVec n;
        n.reserve(q.dim);
        Rat b = c.bound;
        for (std::size_t i = 0; i < p.dim; ++i) {
            if (i >= pos && i < pos + values.size())
                b -= c.normal[i] * values[i - pos];
            else
                n.push_back(c.normal[i]);
        }
        q.constraints.push_back(Constraint{std::move(n), std::move(b), c.strict});
    }
    return q;
}

} // namespace setconj
