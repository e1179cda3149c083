#include <catch2/catch_amalgamated.hpp>

#include "setconj/rng.hpp"
#include "setconj/upper_set.hpp"

#include "helpers.hpp"

using namespace setconj;
using namespace setconj::testing;

namespace {

Cone quadrant() { return Cone::make(2, {rv({1, 0}), rv({0, 1})}); }
Cone ray_cone() { return Cone::make(2, {rv({1, 0})}); }

UpperSet shifted_cone(const Cone& c, std::initializer_list<int> shift) {
    return translate(UpperSet::cone_itself(c), rv(shift));
}

// Random z* in C^- \ {0}: a positive combination of dual generators.
RatVec random_dual(const Cone& c, SplitMix64& rng) {
    RatVec z(c.dim());
    for (const auto& d : c.dual_generators()) {
        Rat w(rng.int_in(0, 3));
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += w * d[i];
    }
    if (is_zero_vec(z)) z = c.dual_generators()[0];
    return z;
}

} // namespace

TEST_CASE("cone construction and duals") {
    Cone q = quadrant();
    REQUIRE(q.dual_generators().size() == 2);
    REQUIRE(q.in_dual(rv({-1, -2})));
    REQUIRE_FALSE(q.in_dual(rv({1, -2})));

    Cone r = ray_cone();
    // C^- of a single ray is a halfplane: one facet normal plus a lineality pair.
    REQUIRE(r.in_dual(rv({-1, 5})));
    REQUIRE(r.in_dual(rv({0, -7})));
    REQUIRE_FALSE(r.in_dual(rv({1, 0})));

    REQUIRE_THROWS_AS(Cone::make(2, {rv({0, 0})}), ContractViolation);
    // C = Z (lineality everywhere) has trivial dual.
    REQUIRE_THROWS_AS(Cone::make(1, {rv({1}), rv({-1})}), ContractViolation);
}

TEST_CASE("upper set construction validates the recession property") {
    Cone q = quadrant();
    // A downward halfspace is not Q^2_+-upper.
    REQUIRE_THROWS_AS(UpperSet::make(q, {poly(2, {le({0, 1}, 0)})}), ContractViolation);
    REQUIRE_NOTHROW(UpperSet::make(q, {poly(2, {le({0, -1}, 0)})}));
    // Empty pieces are dropped silently.
    REQUIRE(UpperSet::make(q, {Polyhedron::empty(2)}).is_empty_set());
}

TEST_CASE("canonical absorbs duplicates and nested pieces") {
    Cone q = quadrant();
    UpperSet c = UpperSet::cone_itself(q);
    UpperSet dup = UpperSet::make(q, {q.h_rep(), q.h_rep()});
    REQUIRE(canonical(dup).pieces().size() == 1);

    UpperSet nested = lattice_inf(q, {shifted_cone(q, {1, 1}), c});
    UpperSet can = canonical(nested);
    REQUIRE(can.pieces().size() == 1);
    REQUIRE(equal(can, c));

    REQUIRE(canonical(UpperSet::empty_set(q)).is_empty_set());
}

TEST_CASE("minkowski addition") {
    Cone q = quadrant();
    UpperSet c = UpperSet::cone_itself(q);
    REQUIRE(equal(minkowski_add(c, c), c));

    UpperSet s = minkowski_add(shifted_cone(q, {1, 0}), shifted_cone(q, {0, 1}));
    REQUIRE(equal(s, shifted_cone(q, {1, 1})));
    REQUIRE(s.contains(rv({1, 1})));
    REQUIRE_FALSE(s.contains(rv({0, 0})));

    REQUIRE(minkowski_add(c, UpperSet::empty_set(q)).is_empty_set());
}

TEST_CASE("scaling uses the altered multiplication at zero") {
    Cone q = quadrant();
    UpperSet a = shifted_cone(q, {5, 5});
    REQUIRE(equal(scale(Rat(0), a), UpperSet::cone_itself(q)));
    REQUIRE(equal(scale(Rat(2), shifted_cone(q, {1, 0})), shifted_cone(q, {2, 0})));
    REQUIRE(equal(scale(Rat(1), a), a));
    REQUIRE_THROWS_AS(scale(Rat(-1), a), ContractViolation);
}

TEST_CASE("lattice infimum and supremum") {
    Cone q = quadrant();
    UpperSet c = UpperSet::cone_itself(q);
    UpperSet t = shifted_cone(q, {1, 1});
    REQUIRE(equal(lattice_inf(q, {c, t}), c));
    REQUIRE(equal(lattice_sup(q, {c, t}), t));

    UpperSet h1 = UpperSet::make(q, {poly(2, {le({-1, 0}, 0)})});
    UpperSet h2 = UpperSet::make(q, {poly(2, {le({0, -1}, 0)})});
    UpperSet meet = lattice_sup(q, {h1, h2});
    REQUIRE(equal(meet, c));
    REQUIRE(meet.contains(rv({0, 0})));
    REQUIRE_FALSE(meet.contains(rv({-1, 0})));

    REQUIRE(lattice_inf(q, {}).is_empty_set());
    REQUIRE(lattice_sup(q, {}).is_whole_space());
}

TEST_CASE("residuation") {
    Cone q = quadrant();
    UpperSet c = UpperSet::cone_itself(q);
    REQUIRE(equal(residual(c, c), c));

    UpperSet r = residual(c, shifted_cone(q, {1, 1}));
    REQUIRE(equal(r, shifted_cone(q, {-1, -1})));
    REQUIRE(r.contains(rv({-1, -1})));
    REQUIRE_FALSE(r.contains(rv({-2, 0})));

    REQUIRE(residual(c, UpperSet::empty_set(q)).is_whole_space());
    REQUIRE(residual(UpperSet::empty_set(q), c).is_empty_set());
}

TEST_CASE("residual adjunction on random data") {
    Cone q = quadrant();
    SplitMix64 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        UpperSet a = lattice_inf(
            q, {shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)}),
                UpperSet::halfspace(q, random_dual(q, rng))});
        UpperSet b = shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)});
        UpperSet res = residual(a, b);
        for (int s = 0; s < 6; ++s) {
            RatVec z = rng.rat_vec(2, 3, 2);
            UpperSet zc = translate(UpperSet::cone_itself(q), z);
            bool lhs = res.contains(z);
            bool rhs = superset_of(a, minkowski_add(b, zc));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("sup-addition of upper sets") {
    Cone q = quadrant();
    UpperSet z = UpperSet::whole_space(q);
    UpperSet e = UpperSet::empty_set(q);
    REQUIRE(sup_add(z, e).is_whole_space());
    REQUIRE(sup_add(e, shifted_cone(q, {1, 0})).is_empty_set());
    REQUIRE(equal(sup_add(shifted_cone(q, {1, 0}), shifted_cone(q, {0, 1})),
                  shifted_cone(q, {1, 1})));
}

TEST_CASE("s-duality") {
    Cone q = quadrant();
    REQUIRE(s_dual(UpperSet::empty_set(q)).is_whole_space());
    REQUIRE(s_dual(UpperSet::whole_space(q)).is_empty_set());

    UpperSet h = UpperSet::halfspace(q, rv({-1, 0}));  // {z : z1 >= 0}
    UpperSet sh = s_dual(h);
    // -H = {z1 <= 0}; complement is {z1 > 0}.
    REQUIRE(sh.contains(rv({1, 0})));
    REQUIRE_FALSE(sh.contains(rv({0, 0})));
    REQUIRE(equal(s_dual(sh), h));

    SplitMix64 rng(32);
    for (int iter = 0; iter < 10; ++iter) {
        RatVec zs = random_dual(q, rng);
        UpperSet a = translate(UpperSet::halfspace(q, zs), rng.rat_vec(2, 2, 2));
        REQUIRE(equal(s_dual(s_dual(a)), a));
    }
}

TEST_CASE("s-twisted addition equals residuation") {
    Cone q = quadrant();
    SplitMix64 rng(33);
    for (int iter = 0; iter < 10; ++iter) {
        UpperSet a = translate(UpperSet::halfspace(q, random_dual(q, rng)), rng.rat_vec(2, 2, 2));
        UpperSet b = translate(UpperSet::halfspace(q, random_dual(q, rng)), rng.rat_vec(2, 2, 2));
        // A +s B = s(s^{-1}(A) + B) with s an involution.
        UpperSet twisted = s_dual(minkowski_add(s_dual(a), b));
        REQUIRE(equal(twisted, residual(a, b)));
    }
}

TEST_CASE("Heyde lemma instantiation on halfspaces") {
    Cone q = quadrant();
    UpperSet theta = UpperSet::cone_itself(q);
    SplitMix64 rng(34);
    for (int iter = 0; iter < 10; ++iter) {
        UpperSet w = translate(UpperSet::halfspace(q, random_dual(q, rng)), rng.rat_vec(2, 2, 2));
        REQUIRE(equal(s_dual(w), residual(s_dual(theta), w)));
    }
}

TEST_CASE("conlinear axioms on samples") {
    Cone q = quadrant();
    SplitMix64 rng(35);
    for (int iter = 0; iter < 10; ++iter) {
        UpperSet a = shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)});
        UpperSet b = translate(UpperSet::halfspace(q, random_dual(q, rng)), rng.rat_vec(2, 2, 2));
        Rat r(rng.int_in(1, 4), rng.int_in(1, 2)), s(rng.int_in(1, 4), rng.int_in(1, 2));
        REQUIRE(equal(scale(r, minkowski_add(a, b)), minkowski_add(scale(r, a), scale(r, b))));
        REQUIRE(equal(scale(r, scale(s, a)), scale(r * s, a)));
        REQUIRE(equal(scale(Rat(1), a), a));
        REQUIRE(equal(scale(Rat(0), a), UpperSet::cone_itself(q)));
    }
}

TEST_CASE("distributivity of addition over the lattice") {
    Cone q = quadrant();
    SplitMix64 rng(36);
    for (int iter = 0; iter < 8; ++iter) {
        UpperSet a = shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)});
        std::vector<UpperSet> fam;
        std::size_t n = 1 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i)
            fam.push_back(shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)}));
        std::vector<UpperSet> sums;
        for (const auto& m : fam) sums.push_back(minkowski_add(a, m));
        REQUIRE(equal(minkowski_add(a, lattice_inf(q, fam)), lattice_inf(q, sums)));
        // A + sup M is a subset of sup(A + M) as point sets.
        REQUIRE(region_is_subset(minkowski_add(a, lattice_sup(q, fam)).pieces(),
                                 lattice_sup(q, sums).pieces()));
    }
}

TEST_CASE("negation round trip and hull stability") {
    Cone q = quadrant();
    SplitMix64 rng(37);
    for (int iter = 0; iter < 6; ++iter) {
        UpperSet a = lattice_inf(
            q, {shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)}),
                shifted_cone(q, {(int)rng.int_in(-2, 2), (int)rng.int_in(-2, 2)})});
        REQUIRE(region_equal(region_negate(negate_region(a)), a.pieces()));
        // Q-upper closure: the hull of A equals the hull of A + C.
        Polyhedron ha = hull_of_union(a.pieces(), 2);
        Polyhedron hac = hull_of_union(minkowski_add(a, UpperSet::cone_itself(q)).pieces(), 2);
        REQUIRE(canonicalize(ha) == canonicalize(hac));
    }
}

TEST_CASE("ray cone upper sets allow full-space unions") {
    Cone r = ray_cone();
    // {z2 >= 0} and {z2 <= 0} are both upper for the horizontal ray; their
    // union is the whole space even though no piece alone is.
    UpperSet u = UpperSet::make(r, {poly(2, {le({0, -1}, 0)}), poly(2, {le({0, 1}, 0)})});
    REQUIRE(u.is_whole_space());
}
