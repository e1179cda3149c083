#include <catch2/catch_amalgamated.hpp>

#include "setconj/extended_real.hpp"
#include "setconj/rng.hpp"

using namespace setconj;

namespace {

const ExtReal kNegInf = ExtReal::neg_inf();
const ExtReal kPosInf = ExtReal::pos_inf();

std::vector<ExtReal> probe_set() {
    return {kNegInf, ExtReal(-1), ExtReal(0), ExtReal(1), kPosInf};
}

ExtReal sample(SplitMix64& rng) {
    switch (rng.below(6)) {
        case 0: return kNegInf;
        case 1: return kPosInf;
        default: return ExtReal(rng.rat());
    }
}

// Oracle for inf{t : pred(t)} when pred is monotone increasing: the returned
// value v must have pred true strictly above it and false strictly below it,
// on the symbolic probe set extended with v's neighbours.
template <typename Pred>
void check_monotone_inf(const ExtReal& v, Pred pred) {
    std::vector<ExtReal> probes = probe_set();
    if (v.is_finite()) {
        probes.push_back(ExtReal(v.value() - 1));
        probes.push_back(ExtReal(v.value() + 1));
        probes.push_back(v);
    }
    for (const ExtReal& t : probes) {
        if (v < t) REQUIRE(pred(t));
        if (t < v) REQUIRE_FALSE(pred(t));
    }
}

template <typename Pred>
void check_monotone_sup(const ExtReal& v, Pred pred) {
    // pred monotone decreasing; sup of its truth set.
    std::vector<ExtReal> probes = probe_set();
    if (v.is_finite()) {
        probes.push_back(ExtReal(v.value() - 1));
        probes.push_back(ExtReal(v.value() + 1));
        probes.push_back(v);
    }
    for (const ExtReal& t : probes) {
        if (t < v) REQUIRE(pred(t));
        if (v < t) REQUIRE_FALSE(pred(t));
    }
}

} // namespace

TEST_CASE("inf-addition constants and finite arithmetic") {
    REQUIRE(inf_add(kPosInf, kNegInf) == kPosInf);
    REQUIRE(inf_add(kNegInf, kPosInf) == kPosInf);
    REQUIRE(inf_add(ExtReal(2), ExtReal(3)) == ExtReal(5));
    REQUIRE(inf_add(kNegInf, ExtReal(7)) == kNegInf);
    for (const ExtReal& r : probe_set()) REQUIRE(inf_add(kPosInf, r) == kPosInf);
}

TEST_CASE("sup-addition constants and finite arithmetic") {
    REQUIRE(sup_add(kNegInf, kPosInf) == kNegInf);
    REQUIRE(sup_add(ExtReal(2), ExtReal(3)) == ExtReal(5));
    REQUIRE(sup_add(kPosInf, ExtReal(7)) == kPosInf);
    for (const ExtReal& r : probe_set()) REQUIRE(sup_add(kNegInf, r) == kNegInf);
}

TEST_CASE("inf-residual against its defining infimum") {
    REQUIRE(inf_residual(ExtReal(5), ExtReal(3)) == ExtReal(2));
    REQUIRE(inf_residual(kPosInf, kPosInf) == kNegInf);
    REQUIRE(inf_residual(ExtReal(0), kNegInf) == kPosInf);

    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        ExtReal r = sample(rng), s = sample(rng);
        ExtReal v = inf_residual(r, s);
        check_monotone_inf(v, [&](const ExtReal& t) { return r <= inf_add(s, t); });
        REQUIRE(r <= inf_add(s, v));  // r <= s (+) (r dif s)
    }
}

TEST_CASE("sup-residual against its defining supremum") {
    REQUIRE(sup_residual(ExtReal(5), ExtReal(3)) == ExtReal(2));
    REQUIRE(sup_residual(kNegInf, kNegInf) == kPosInf);
    REQUIRE(sup_residual(ExtReal(0), kPosInf) == kNegInf);

    SplitMix64 rng(12);
    for (int i = 0; i < 500; ++i) {
        ExtReal r = sample(rng), s = sample(rng);
        ExtReal v = sup_residual(r, s);
        check_monotone_sup(v, [&](const ExtReal& t) { return sup_add(s, t) <= r; });
        REQUIRE(sup_add(s, v) <= r);
    }
}

TEST_CASE("negation is an order-reversing involution") {
    REQUIRE(negate(kPosInf) == kNegInf);
    REQUIRE(negate(kNegInf) == kPosInf);
    REQUIRE(negate(ExtReal(3)) == ExtReal(-3));
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        ExtReal r = sample(rng), s = sample(rng);
        REQUIRE(negate(negate(r)) == r);
        if (r <= s) REQUIRE(negate(s) <= negate(r));
    }
}

TEST_CASE("De Morgan pairs between the two additions") {
    SplitMix64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        ExtReal r = sample(rng), s = sample(rng);
        REQUIRE(negate(inf_add(r, s)) == sup_add(negate(s), negate(r)));
        REQUIRE(inf_add(r, negate(s)) == sup_residual(r, s));
        REQUIRE(sup_add(r, negate(s)) == inf_residual(r, s));
        REQUIRE(negate(sup_add(r, s)) == inf_add(negate(s), negate(r)));
    }
}

TEST_CASE("adjunction and monotonicity") {
    SplitMix64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        ExtReal r = sample(rng), s = sample(rng), t = sample(rng), t2 = sample(rng);
        REQUIRE((r <= inf_add(s, t)) == (inf_residual(r, s) <= t));
        if (t <= t2) {
            REQUIRE(inf_add(s, t) <= inf_add(s, t2));
            REQUIRE(sup_add(s, t) <= sup_add(s, t2));
        }
    }
}

TEST_CASE("distributivity over finite families") {
    SplitMix64 rng(16);
    auto fam_inf = [](const std::vector<ExtReal>& m) {
        ExtReal v = kPosInf;  // inf of the empty family
        for (const auto& x : m)
            if (x < v) v = x;
        return v;
    };
    auto fam_sup = [](const std::vector<ExtReal>& m) {
        ExtReal v = kNegInf;
        for (const auto& x : m)
            if (v < x) v = x;
        return v;
    };
    for (int i = 0; i < 500; ++i) {
        ExtReal r = sample(rng);
        std::vector<ExtReal> m;
        std::size_t sz = rng.below(5) + 1;
        for (std::size_t j = 0; j < sz; ++j) m.push_back(sample(rng));
        std::vector<ExtReal> im, sm;
        for (const auto& x : m) {
            im.push_back(inf_add(r, x));
            sm.push_back(sup_add(r, x));
        }
        REQUIRE(fam_inf(im) == inf_add(r, fam_inf(m)));
        REQUIRE(fam_sup(sm) == sup_add(r, fam_sup(m)));
        REQUIRE(fam_sup(im) <= inf_add(r, fam_sup(m)));
        REQUIRE(fam_inf(sm) <= sup_add(r, fam_inf(m)));
    }
}

TEST_CASE("scaling rules") {
    REQUIRE(scale(Rat(3), kPosInf) == kPosInf);
    REQUIRE(scale(Rat(3), kNegInf) == kNegInf);
    REQUIRE(scale(Rat(0), kPosInf) == ExtReal(0));
    REQUIRE(scale(Rat(0), kNegInf) == ExtReal(0));
    REQUIRE(scale(parse_rat("2/3"), ExtReal(Rat(9, 2))) == ExtReal(3));
}

TEST_CASE("textual round-trip is bit exact") {
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        ExtReal r = sample(rng);
        REQUIRE(parse_ext_real(to_string(r)) == r);
    }
    REQUIRE(to_string(kNegInf) == "-inf");
    REQUIRE(to_string(kPosInf) == "+inf");
    REQUIRE(to_string(ExtReal(Rat(-7, 3))) == "-7/3");
    REQUIRE_THROWS_AS(parse_rat("1/0"), ParseError);
    REQUIRE_THROWS_AS(parse_rat("x"), ParseError);
}
