#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "setconj/lp.hpp"
#include "setconj/polyhedron.hpp"

namespace setconj {

struct FmOptions {
    std::size_t max_intermediate = 10000;
    bool lp_redundancy = true;
};

// Syntactic cleanup: normalize scaling, drop vacuous rows, keep only the
// tightest bound per normal direction.  Detects zero-normal contradictions
// and collapses them to the designated empty form.
inline Polyhedron tidy(const Polyhedron& p) {
    std::map<std::pair<RatVec, bool>, Rat> tight;  // (normal, strict) -> bound
    std::vector<Constraint> kept;
    for (const auto& raw : p.constraints) {
        Constraint c = raw.normalized();
        if (is_zero_vec(c.normal)) {
            bool ok = c.strict ? (c.bound > 0) : (c.bound >= 0);
            if (!ok) return Polyhedron::empty(p.dim);
            continue;
        }
        auto key = std::make_pair(c.normal, c.strict);
        auto it = tight.find(key);
        if (it == tight.end())
            tight.emplace(key, c.bound);
        else if (c.bound < it->second)
            it->second = c.bound;
    }
    Polyhedron q(p.dim);
    for (auto& [key, bound] : tight) {
        // With both flavors present for one normal, {n.v < bs} subsumes
        // {n.v <= bn} iff bs <= bn, and conversely {<= bn} subsumes {< bs}
        // iff bn < bs.
        auto other = tight.find(std::make_pair(key.first, !key.second));
        if (other != tight.end()) {
            if (key.second && bound > other->second) continue;    // strict row is weaker
            if (!key.second && bound >= other->second) continue;  // non-strict row is weaker
        }
        q.constraints.push_back(Constraint{key.first, bound, key.second});
    }
    std::sort(q.constraints.begin(), q.constraints.end(), constraint_less);
    return q;
}

// Removes constraints implied by the remaining ones (exact LP test that
// honors strict flags).  Assumes a tidied system.
inline Polyhedron remove_redundant(Polyhedron p) {
    for (std::size_t i = 0; i < p.constraints.size();) {
        Polyhedron rest(p.dim);
        for (std::size_t j = 0; j < p.constraints.size(); ++j)
            if (j != i) rest.constraints.push_back(p.constraints[j]);
        rest.constraints.push_back(p.constraints[i].negated());
        if (is_empty(rest))
            p.constraints.erase(p.constraints.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return p;
}

namespace detail {

// One Fourier-Motzkin step: eliminates coordinate k, leaving a system over
// the same ambient space with zero coefficients at k.  Strictness combines
// as strict whenever either parent row is strict.
inline std::vector<Constraint> fm_step(const std::vector<Constraint>& cs, std::size_t k,
                                       std::size_t cap) {
    std::vector<const Constraint*> lower, upper;
    std::vector<Constraint> out;
    for (const auto& c : cs) {
        if (c.normal[k] < 0)
            lower.push_back(&c);
        else if (c.normal[k] > 0)
            upper.push_back(&c);
        else
            out.push_back(c);
    }
    if (out.size() + lower.size() * upper.size() > cap)
        throw ResourceLimitError("Fourier-Motzkin intermediate constraint cap exceeded");
    for (const Constraint* l : lower) {
        for (const Constraint* u : upper) {
            const Rat& alpha = l->normal[k];  // < 0
            const Rat& beta = u->normal[k];   // > 0
            RatVec n(l->normal.size());
            for (std::size_t j = 0; j < n.size(); ++j)
                n[j] = beta * l->normal[j] - alpha * u->normal[j];
            Rat b = beta * l->bound - alpha * u->bound;
            out.push_back(Constraint{std::move(n), std::move(b), l->strict || u->strict});
        }
    }
    return out;
}

} // namespace detail

// Eliminates the given coordinates (which disappear from the result; the
// surviving coordinates keep their relative order).  Exact projection,
// including strict faces.  Redundancy is pruned after every eliminated
// variable to contain the quadratic blow-up.
inline Polyhedron eliminate(const Polyhedron& p, std::vector<std::size_t> drop,
                            const FmOptions& opt = {}) {
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (std::size_t k : drop)
        if (k >= p.dim) throw ContractViolation("eliminate: coordinate out of range");

    Polyhedron work = tidy(p);
    std::vector<bool> todo(p.dim, false);
    for (std::size_t k : drop) todo[k] = true;

    for (std::size_t round = 0; round < drop.size(); ++round) {
        // Cheapest variable first: fewest lower*upper products.
        std::size_t best = p.dim;
        std::size_t best_cost = 0;
        for (std::size_t k = 0; k < p.dim; ++k) {
            if (!todo[k]) continue;
            std::size_t lo = 0, hi = 0;
            for (const auto& c : work.constraints) {
                if (c.normal[k] < 0) ++lo;
                else if (c.normal[k] > 0) ++hi;
            }
            std::size_t cost = lo * hi;
            if (best == p.dim || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        work.constraints = detail::fm_step(work.constraints, best, opt.max_intermediate);
        todo[best] = false;
        work = tidy(work);
        if (work.is_designated_empty()) break;
        if (opt.lp_redundancy) work = remove_redundant(work);
    }

    // Drop the eliminated columns.
    Polyhedron out(p.dim - drop.size());
    if (work.is_designated_empty()) return Polyhedron::empty(out.dim);
    for (const auto& c : work.constraints) {
        RatVec n;
        n.reserve(out.dim);
        for (std::size_t j = 0; j < p.dim; ++j) {
            bool dropped = std::binary_search(drop.begin(), drop.end(), j);
            if (!dropped) n.push_back(c.normal[j]);
            else if (c.normal[j] != 0)
                throw ContractViolation("eliminate: residual coefficient");  // unreachable
        }
        out.constraints.push_back(Constraint{std::move(n), c.bound, c.strict});
    }
    return out;
}

// Exact projection onto the kept coordinates (ascending order).
inline Polyhedron project(const Polyhedron& p, std::vector<std::size_t> keep,
                          const FmOptions& opt = {}) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::size_t> drop;
    for (std::size_t k = 0; k < p.dim; ++k)
        if (!std::binary_search(keep.begin(), keep.end(), k)) drop.push_back(k);
    for (std::size_t k : keep)
        if (k >= p.dim) throw ContractViolation("project: keep index out of range");
    return eliminate(p, std::move(drop), opt);
}

} // namespace setconj
