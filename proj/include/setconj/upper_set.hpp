#pragma once

#include <utility>
#include <vector>

#include "setconj/canonical.hpp"
#include "setconj/double_description.hpp"
#include "setconj/region.hpp"

namespace setconj {

// Polyhedral ordering cone C with {0} != C != Z and nontrivial negative dual
// cone.  The dual generators span {z* : z*(c) <= 0 for all c in C} and are
// computed once at construction.
class Cone {
public:
    static Cone make(std::size_t dim, std::vector<RatVec> generators) {
        Cone c;
        c.dim_ = dim;
        bool nontrivial = false;
        for (auto& g : generators) {
            if (g.size() != dim) throw ContractViolation("cone generator dimension mismatch");
            if (!is_zero_vec(g)) nontrivial = true;
        }
        if (!nontrivial) throw ContractViolation("cone must be strictly larger than {0}");
        c.generators_ = std::move(generators);

        ConeGens dual = cone_generators(c.generators_, dim);
        for (const auto& r : dual.rays) c.dual_generators_.push_back(r);
        for (const auto& w : dual.lineality) {
            c.dual_generators_.push_back(scale_to_coprime(w));
            c.dual_generators_.push_back(scale_to_coprime(vec_neg(w)));
        }
        if (c.dual_generators_.empty())
            throw ContractViolation("cone must satisfy C^- \\ {0} nonempty (C != Z)");

        VRep v;
        v.vertices.push_back(RatVec(dim));
        for (const auto& g : c.generators_)
            if (!is_zero_vec(g)) v.rays.push_back(g);
        c.h_rep_ = v_to_h(v, dim);
        return c;
    }

    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& generators() const { return generators_; }
    const std::vector<RatVec>& dual_generators() const { return dual_generators_; }
    const Polyhedron& h_rep() const { return h_rep_; }

    // z* in C^- iff it is nonpositive on every generator.
    bool in_dual(const RatVec& z_star) const {
        for (const auto& g : generators_)
            if (dot(z_star, g) > 0) return false;
        return true;
    }

    bool operator==(const Cone& o) const { return dim_ == o.dim_ && h_rep_ == o.h_rep_; }

private:
    std::size_t dim_ = 0;
    std::vector<RatVec> generators_;
    std::vector<RatVec> dual_generators_;
    Polyhedron h_rep_;
};

// Element of the inf-residuated lattice of C-upper subsets of Z: a finite
// union of polyhedra, each closed under adding C.  The EMPTY union is the
// greatest element, the whole space the smallest; order is reverse inclusion.
class UpperSet {
public:
    static UpperSet make(Cone cone, Region pieces) {
        Region live;
        for (auto& p : pieces) {
            if (p.dim != cone.dim()) throw ContractViolation("upper set piece dimension mismatch");
            if (is_empty(p)) continue;
            for (const auto& g : cone.generators())
                if (!p.admits_direction(g))
                    throw ContractViolation("piece is not closed under adding the cone");
            live.push_back(std::move(p));
        }
        return UpperSet(std::move(cone), std::move(live));
    }

    // For results of complement-based operations: single pieces of the union
    // need not be upper on their own, so validate A + C subset A at the set
    // level instead (exact, via the membership oracle).
    static UpperSet make_set_checked(Cone cone, Region pieces) {
        Region live;
        for (auto& p : pieces) {
            if (p.dim != cone.dim()) throw ContractViolation("upper set piece dimension mismatch");
            if (!is_empty(p)) live.push_back(std::move(p));
        }
        for (const auto& p : live) {
            Polyhedron grown = minkowski_pieces(p, cone.h_rep());
            if (!region_is_subset({grown}, live))
                throw ContractViolation("union is not closed under adding the cone");
        }
        return UpperSet(std::move(cone), std::move(live));
    }

    static UpperSet empty_set(Cone cone) { return UpperSet(std::move(cone), {}); }

    static UpperSet whole_space(Cone cone) {
        std::size_t d = cone.dim();
        return UpperSet(std::move(cone), {Polyhedron::whole_space(d)});
    }

    static UpperSet cone_itself(Cone cone) {
        Polyhedron h = cone.h_rep();
        return UpperSet(std::move(cone), {std::move(h)});
    }

    // H(z*) = {z : z*(z) <= 0}; requires z* in C^-.
    static UpperSet halfspace(Cone cone, const RatVec& z_star) {
        if (!cone.in_dual(z_star)) throw ContractViolation("halfspace normal outside C^-");
        if (is_zero_vec(z_star)) return whole_space(std::move(cone));
        Polyhedron h(cone.dim(), {Constraint{z_star, Rat(0), false}});
        return UpperSet(std::move(cone), {std::move(h)});
    }

    const Cone& cone() const { return cone_; }
    std::size_t dim() const { return cone_.dim(); }
    const Region& pieces() const { return pieces_; }

    bool is_empty_set() const { return pieces_.empty(); }
    bool is_whole_space() const {
        return !pieces_.empty() &&
               region_is_subset({Polyhedron::whole_space(dim())}, pieces_);
    }
    bool contains(const RatVec& z) const { return region_contains(pieces_, z); }

    std::string to_string() const {
        if (pieces_.empty()) return "{}";
        std::string s;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            if (i) s += " u ";
            s += pieces_[i].to_string();
        }
        return s;
    }

private:
    UpperSet(Cone cone, Region pieces) : cone_(std::move(cone)), pieces_(std::move(pieces)) {}

    Cone cone_;
    Region pieces_;
};

// Equality as point sets (membership oracle).
inline bool equal(const UpperSet& a, const UpperSet& b) {
    return region_equal(a.pieces(), b.pieces());
}

inline bool superset_of(const UpperSet& a, const UpperSet& b) {
    return region_is_subset(b.pieces(), a.pieces());
}

// Lattice order: a <= b iff a superset b.
inline bool lattice_leq(const UpperSet& a, const UpperSet& b) { return superset_of(a, b); }

namespace detail {
inline void require_compatible(const UpperSet& a, const UpperSet& b) {
    if (!(a.cone() == b.cone())) throw ContractViolation("upper sets over different cones");
}
} // namespace detail

// Normal form: canonicalize single pieces, absorb dominated pieces.
inline UpperSet canonical(const UpperSet& a) {
    Region r = region_normalize(a.pieces());
    for (auto& p : r) p = canonicalize(p);
    return UpperSet::make(a.cone(), std::move(r));
}

inline UpperSet minkowski_add(const UpperSet& a, const UpperSet& b) {
    detail::require_compatible(a, b);
    return UpperSet::make(a.cone(), region_minkowski(a.pieces(), b.pieces()));
}

inline UpperSet translate(const UpperSet& a, const RatVec& shift) {
    return UpperSet::make(a.cone(), region_translate(a.pieces(), shift));
}

// t >= 0; scaling by zero collapses to the cone itself (the neutral element).
inline UpperSet scale(const Rat& t, const UpperSet& a) {
    if (t < 0) throw ContractViolation("upper set scaling requires t >= 0");
    if (t == 0) return UpperSet::cone_itself(a.cone());
    return UpperSet::make(a.cone(), region_scale(t, a.pieces()));
}

// inf = union of pieces; empty family -> empty set (the greatest element).
inline UpperSet lattice_inf(const Cone& cone, const std::vector<UpperSet>& family) {
    Region all;
    for (const auto& m : family) {
        if (!(m.cone() == cone)) throw ContractViolation("upper sets over different cones");
        all.insert(all.end(), m.pieces().begin(), m.pieces().end());
    }
    return UpperSet::make(cone, region_normalize(std::move(all)));
}

// sup = intersection; empty family -> whole space (the smallest element).
inline UpperSet lattice_sup(const Cone& cone, const std::vector<UpperSet>& family) {
    Region acc = region_whole(cone.dim());
    for (const auto& m : family) {
        if (!(m.cone() == cone)) throw ContractViolation("upper sets over different cones");
        acc = region_intersect(acc, m.pieces());
        if (acc.empty()) break;
    }
    return UpperSet::make(cone, region_normalize(std::move(acc)));
}

namespace detail {

// a dif piece for convex a: shift every halfspace of a inward by the support
// value of its normal over the piece; strictness of the result depends on
// whether that support value is attained.
inline Region residual_single_convex(const Polyhedron& a, const Polyhedron& piece) {
    Polyhedron out(a.dim);
    for (const auto& c : a.constraints) {
        ExtReal sigma = support_value(c.normal, piece);
        if (sigma.is_pos_inf()) return {};
        if (sigma.is_neg_inf()) throw ContractViolation("residual against empty piece");
        bool attained = support_attained(c.normal, sigma.value(), piece);
        bool strict = c.strict && attained;
        out.constraints.push_back(Constraint{c.normal, c.bound - sigma.value(), strict});
    }
    if (is_empty(out)) return {};
    return {out};
}

} // namespace detail

// A dif B = {z : B + z subset A}.  For a union-shaped A the complement route
// computes it exactly: A dif B = complement((complement A) + (-B)).
inline UpperSet residual(const UpperSet& a, const UpperSet& b) {
    detail::require_compatible(a, b);
    if (b.is_empty_set()) return UpperSet::whole_space(a.cone());
    if (a.is_empty_set()) return UpperSet::empty_set(a.cone());
    Region acc = region_whole(a.dim());
    for (const auto& piece : b.pieces()) {
        Region contribution;
        if (a.pieces().size() == 1) {
            contribution = detail::residual_single_convex(a.pieces()[0], piece);
        } else {
            Region outside = region_complement(a.pieces(), a.dim());
            Region grown = region_minkowski(outside, {negate_set(piece)});
            contribution = region_complement(grown, a.dim());
        }
        acc = region_intersect(acc, contribution);
        if (acc.empty()) break;
    }
    return UpperSet::make_set_checked(a.cone(), region_normalize(std::move(acc)));
}

// Sup-addition of Minkowski type: Z absorbs, otherwise the plain sum.
inline UpperSet sup_add(const UpperSet& a, const UpperSet& b) {
    detail::require_compatible(a, b);
    if (a.is_whole_space() || b.is_whole_space()) return UpperSet::whole_space(a.cone());
    return minkowski_add(a, b);
}

// s(A) = Z \ (-A), the twist of the (+,s)-duality.  Exact on any finite
// union within the complementation budget.
inline UpperSet s_dual(const UpperSet& a, std::size_t budget = 4096) {
    if (a.is_empty_set()) return UpperSet::whole_space(a.cone());
    Region neg = region_negate(a.pieces());
    Region comp = region_complement(neg, a.dim(), budget);
    return UpperSet::make_set_checked(a.cone(), region_normalize(std::move(comp)));
}

// Pointwise negation leaves the upper-set lattice (the image is a lower
// set), so the result is returned as a bare region.
inline Region negate_region(const UpperSet& a) { return region_negate(a.pieces()); }

} // namespace setconj
