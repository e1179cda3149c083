#pragma once

#include <set>
#include <vector>

#include "setconj/canonical.hpp"
#include "setconj/linalg.hpp"
#include "setconj/polyhedron.hpp"

namespace setconj {

struct ConeGens {
    std::vector<RatVec> lineality;
    std::vector<RatVec> rays;
};

struct VRep {
    std::vector<RatVec> vertices;
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
};

namespace detail {

// Double description on the pointed quotient.  Input: cone {y : My <= 0}.
// The lineality space is split off first, the pointed part is seeded with a
// simplicial basis and remaining rows are added incrementally; adjacency of
// ray pairs is decided by the algebraic rank test.
inline ConeGens cone_generators_impl(const std::vector<RatVec>& m_rows, std::size_t dim) {
    ConeGens out;
    out.lineality = null_space(m_rows, dim);
    std::vector<RatVec> basis = row_space(m_rows, dim);
    const std::size_t k = basis.size();
    if (k == 0) return out;

    // Quotient coordinates: y = B^T u, rows become m B^T.
    std::vector<RatVec> q_rows(m_rows.size(), RatVec(k));
    for (std::size_t i = 0; i < m_rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) q_rows[i][j] = dot(m_rows[i], basis[j]);

    // Greedy initial simplicial basis: first k independent rows.
    std::vector<std::size_t> seed;
    std::vector<RatVec> seed_rows;
    for (std::size_t i = 0; i < q_rows.size() && seed.size() < k; ++i) {
        seed_rows.push_back(q_rows[i]);
        if (rank(seed_rows, k) == seed.size() + 1)
            seed.push_back(i);
        else
            seed_rows.pop_back();
    }
    auto inv = invert(seed_rows);
    if (!inv) throw ContractViolation("cone_generators: singular seed basis");  // unreachable

    std::vector<RatVec> rays;
    for (std::size_t j = 0; j < k; ++j) {
        RatVec r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = -(*inv)[i][j];
        rays.push_back(scale_to_coprime(r));
    }

    std::vector<std::size_t> processed = seed;
    auto tight_rank = [&](const RatVec& a, const RatVec& b) {
        std::vector<RatVec> rows;
        for (std::size_t i : processed)
            if (dot(q_rows[i], a) == 0 && dot(q_rows[i], b) == 0) rows.push_back(q_rows[i]);
        return rank(rows, k);
    };

    for (std::size_t i = 0; i < q_rows.size(); ++i) {
        bool seeded = false;
        for (std::size_t s : seed) seeded = seeded || s == i;
        if (seeded) continue;
        const RatVec& m = q_rows[i];
        std::vector<RatVec> keep, minus, plus;
        for (auto& r : rays) {
            Rat v = dot(m, r);
            if (v == 0) keep.push_back(r);
            else if (v < 0) minus.push_back(r);
            else plus.push_back(r);
        }
        if (plus.empty()) {
            processed.push_back(i);
            continue;
        }
        std::set<RatVec> fresh;
        for (const auto& p : plus) {
            for (const auto& q : minus) {
                if (k >= 2 && tight_rank(p, q) != k - 2) continue;
                Rat mp = dot(m, p), mq = dot(m, q);
                RatVec w(k);
                for (std::size_t c = 0; c < k; ++c) w[c] = mp * q[c] - mq * p[c];
                fresh.insert(scale_to_coprime(w));
            }
        }
        rays = std::move(keep);
        for (auto& r : minus) rays.push_back(std::move(r));
        for (auto& w : fresh) rays.push_back(w);
        processed.push_back(i);
    }

    for (const auto& r : rays) {
        RatVec y(dim);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < dim; ++c) y[c] += r[j] * basis[j][c];
        out.rays.push_back(scale_to_coprime(y));
    }
    return out;
}

} // namespace detail

// Lineality basis and extreme rays of {y in Q^dim : My <= 0}.
inline ConeGens cone_generators(const std::vector<RatVec>& m_rows, std::size_t dim) {
    return detail::cone_generators_impl(m_rows, dim);
}

// Generator representation of the closure of a nonempty polyhedron, via the
// homogenization cone {(x,t) : Ax <= tb, t >= 0}.
inline VRep h_to_v(const Polyhedron& p) {
    std::vector<RatVec> rows;
    for (const auto& c : p.constraints) {
        RatVec row = c.normal;
        row.push_back(-c.bound);
        rows.push_back(std::move(row));
    }
    RatVec trow(p.dim + 1);
    trow[p.dim] = -1;
    rows.push_back(std::move(trow));

    ConeGens gens = cone_generators(rows, p.dim + 1);
    VRep v;
    for (const auto& w : gens.lineality) {
        if (w[p.dim] != 0) throw ContractViolation("h_to_v: lineality with nonzero t");
        v.lineality.emplace_back(w.begin(), w.end() - 1);
    }
    for (const auto& r : gens.rays) {
        const Rat& t = r[p.dim];
        RatVec x(r.begin(), r.end() - 1);
        if (t > 0) {
            for (auto& c : x) c /= t;
            v.vertices.push_back(std::move(x));
        } else if (!is_zero_vec(x)) {
            v.rays.push_back(scale_to_coprime(x));
        }
    }
    if (v.vertices.empty()) throw ContractViolation("h_to_v: empty polyhedron");
    return v;
}

// Closed convex hull conv(vertices) + cone(rays) + span(lineality) back in
// H-form, canonicalized.  No vertices means the empty set.
inline Polyhedron v_to_h(const VRep& v, std::size_t dim) {
    if (v.vertices.empty()) return Polyhedron::empty(dim);
    std::vector<RatVec> rows;
    for (const auto& p : v.vertices) {
        RatVec row = p;
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    for (const auto& r : v.rays) {
        RatVec row = r;
        row.push_back(0);
        rows.push_back(std::move(row));
    }
    for (const auto& w : v.lineality) {
        RatVec row = w;
        row.push_back(0);
        rows.push_back(row);
        for (auto& x : row) x = -x;
        rows.push_back(std::move(row));
    }
    ConeGens polar = cone_generators(rows, dim + 1);
    Polyhedron out(dim);
    auto add = [&](const RatVec& g, bool both) {
        RatVec n(g.begin(), g.end() - 1);
        Rat b = -g.back();
        if (!is_zero_vec(n) || b < 0) out.constraints.push_back(Constraint{n, b, false});
        if (both) {
            RatVec nn = vec_neg(n);
            if (!is_zero_vec(nn) || -b < 0) out.constraints.push_back(Constraint{nn, -b, false});
        }
    };
    for (const auto& g : polar.rays) add(g, false);
    for (const auto& g : polar.lineality) add(g, true);
    return canonicalize(out);
}

// Closed convex hull of a finite union of polyhedra (strict faces are
// closed over).  The empty union is the empty set.
inline Polyhedron hull_of_union(const std::vector<Polyhedron>& pieces, std::size_t dim) {
    VRep all;
    for (const auto& p : pieces) {
        if (p.dim != dim) throw ContractViolation("hull_of_union: dimension mismatch");
        if (is_empty(p)) continue;
        VRep v = h_to_v(p.relaxed());
        all.vertices.insert(all.vertices.end(), v.vertices.begin(), v.vertices.end());
        all.rays.insert(all.rays.end(), v.rays.begin(), v.rays.end());
        all.lineality.insert(all.lineality.end(), v.lineality.begin(), v.lineality.end());
    }
    return v_to_h(all, dim);
}

} // namespace setconj
