#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wfusion/catalog.hpp"
#include "wfusion/format.hpp"

using namespace wfusion;

namespace {

const ExtensionData B2 = make_algebra(Family::B2orb, 1).ext;   // p=2, r_J=1, kappa=0
const ExtensionData B3 = make_algebra(Family::Bp, 3).ext;      // p=3, r_J=1, kappa=0
const ExtensionData B23 = make_algebra(Family::B2orb, 3).ext;  // p=2, r_J=3, kappa=0
const ExtensionData S23 = make_algebra(Family::S2orb, 3).ext;  // p=2, r_J=3, kappa=1
const ExtensionData S3 = make_algebra(Family::Sp, 3).ext;      // p=3, r_J=1, kappa=1

HalfInt h(long long doubled) { return HalfInt::from_doubled(doubled); }

} // namespace

TEST_CASE("extension data validation") {
    CHECK(B2.lambdaJ_sq == Rational(-1));
    CHECK(B23.lambdaJ_sq == Rational(-9));
    CHECK(S3.lambdaJ_sq == Rational(-1, 2));
    CHECK(B2.half_integer_graded);       // p even
    CHECK(!B3.half_integer_graded);      // p odd
    CHECK(B23.half_integer_graded);      // m odd
    CHECK(!S23.half_integer_graded);     // kappa + m even
    CHECK_THROWS_AS(ExtensionData::make(2, 1, 1), Error);  // lambda_J^2 = 0
    CHECK_THROWS_AS(ExtensionData::make(2, 0, 0), Error);  // r_J = 0 needs kappa >= 1
}

TEST_CASE("canonicalize") {
    // kappa = 0 leaves ell alone when r wraps
    CHECK(make_W(B23, 4, 1, h(4)) == make_W(B23, 1, 1, h(4)));
    // kappa = 1 shifts ell by n*kappa
    CHECK(make_W(S23, 4, 1, h(4)) == make_W(S23, 1, 1, h(2)));
    CHECK(make_W(B2, 1, 1, h(0)) == make_W(B2, 1, 1, h(0)));
    // E weights move by multiples of r_J p/2 in v
    ALabel e = make_E(B2, WeightValue(2, 0, 0, Rational(7, 3)), h(1));
    CHECK(e.w.v() == Rational(1, 3));
    CHECK(e.ell == h(1));
    ALabel es = make_E(S3, WeightValue(3, 0, 0, Rational(1, 3) + Rational(3, 2)), h(1));
    CHECK(es.w.v() == Rational(1, 3));
    CHECK(es.ell == h(1 - 2)); // one period down costs one unit of kappa
    // r_J = 0: ell reduced mod kappa, r untouched
    ExtensionData lat = ExtensionData::make(3, 0, 2);
    CHECK(make_W(lat, 5, 1, h(-1)) == make_W(lat, 5, 1, h(3)));
}

TEST_CASE("sector") {
    CHECK(sector(B3, make_W(B3, 1, 1, h(0))) == ASector::Local);
    CHECK(sector(B2, make_W(B2, 1, 1, h(1))) == ASector::Twisted); // ell in (s-1)/2 + 1/2 + Z
    CHECK(sector(B3, make_E(B3, WeightValue(3, 0, 0, Rational(1, 3)), h(2))) == ASector::Local);
    // Q inherits the sector of its top factor
    CHECK(sector(B3, make_Q(B3, 1, 2, h(1))) == ASector::Local);
    CHECK(sector(B3, make_Q(B3, 1, 2, h(2))) == ASector::Twisted);
}

TEST_CASE("induce") {
    CHECK(induce(B3, WeightValue::zero(3), make_atypical(3, 1, 1)) == make_W(B3, 1, 1, h(0)));
    // Bp:3 with g = 3/2 over M[2,1]: ell = 3/2 + 3/2 = 3, canonical W[1,1,3]
    CHECK(induce(B3, WeightValue(3, 0, Rational(3, 2), 0), make_atypical(3, 2, 1))
          == make_W(B3, 1, 1, h(6)));
    // membership failure: ell = 5/6 not in (1/2)Z
    CHECK_THROWS_AS(induce(B2, WeightValue::zero(2),
                           make_fock(2, WeightValue(2, 0, Rational(-1, 3), 0))),
                    Error);
    // projective covers induce to Q
    WeightValue g3(3, 0, Rational(1, 2), 0);
    CHECK(induce(B3, g3, make_proj_cover(3, 1, 2)) == make_Q(B3, 1, 2, h(1)));
}

TEST_CASE("fuse_simple reproduces the printed B3 products") {
    // D- x D+ = L0 + E0
    CHECK(formal_str(fuse_simple(B3, make_W(B3, 1, 2, h(-1)), make_W(B3, 1, 2, h(1))))
          == "1*W[1,1,0] (+) 1*W[1,3,0]");
    // E0 x E0 = Q1 + W3 (Q_{1,3} is the simple projective)
    CHECK(formal_str(fuse_simple(B3, make_W(B3, 1, 3, h(0)), make_W(B3, 1, 3, h(0))))
          == "1*Q[1,1,0] (+) 1*W[1,3,0]");
    // unit and spectral flow: W[1,1,1] shifts ell by one
    ALabel x = make_W(B3, 1, 2, h(1));
    CHECK(fuse_simple(B3, make_W(B3, 1, 1, h(2)), x) == single(make_W(B3, 1, 2, h(3))));
}

TEST_CASE("fuse_simple typical collision at p = 2") {
    // E[1/4] x E[3/4]: weights sum to 1 = a0 + alpha_{1,1}, case 3 with s = 1
    ALabel x = make_E(B2, WeightValue(2, 0, Rational(1, 4), 0), h(1));
    ALabel y = make_E(B2, WeightValue(2, 0, Rational(3, 4), 0), h(-2));
    CHECK(fuse_simple(B2, x, y) == single(make_Q(B2, 1, 1, h(-1))));
}

TEST_CASE("class and peel") {
    // [Q[1,1,0]] at B2: 2 W[1,1,0] + W[1,1,-1] + W[1,1,1]
    AClass c = a_class(B2, make_Q(B2, 1, 1, h(0)));
    CHECK(c[make_W(B2, 1, 1, h(0))] == 2);
    CHECK(c[make_W(B2, 1, 1, h(-2))] == 1);
    CHECK(c[make_W(B2, 1, 1, h(2))] == 1);
    CHECK(a_peel(B2, c) == single(make_Q(B2, 1, 1, h(0))));
    // the printed B3 class of W2^(1/2) x Q1^(0)
    AClass prop;
    prop[make_W(B3, 1, 2, h(1))] = 2;
    prop[make_W(B3, 1, 1, h(-2))] = 1;
    prop[make_W(B3, 1, 1, h(4))] = 1;
    prop[make_W(B3, 1, 3, h(-2))] = 1;
    prop[make_W(B3, 1, 3, h(4))] = 1;
    CHECK(formal_str(a_peel(B3, prop)) == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]");
    // a lone non-projective class has no projective preimage
    AClass bad;
    bad[make_W(B2, 1, 1, h(0))] = 1;
    CHECK_THROWS_AS(a_peel(B2, bad), Error);
}

TEST_CASE("fuse with projective factors") {
    // the corrected fusion rule: W2^(1/2) x Q1^(0) at B3
    FormalObject got = fuse(B3, single(make_W(B3, 1, 2, h(1))), single(make_Q(B3, 1, 1, h(0))));
    CHECK(formal_str(got) == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]");
    // unit against a projective
    CHECK(fuse(B3, single(make_W(B3, 1, 1, h(0))), single(make_Q(B3, 1, 2, h(1))))
          == single(make_Q(B3, 1, 2, h(1))));
    // Q[1,1,0] x W[1,1,1] shifts the cover
    CHECK(fuse(B2, single(make_Q(B2, 1, 1, h(0))), single(make_W(B2, 1, 1, h(2))))
          == single(make_Q(B2, 1, 1, h(2))));
}

TEST_CASE("duals") {
    CHECK(a_dual(B2, make_W(B2, 1, 2, h(1))) == make_W(B2, 1, 2, h(-1)));
    WeightValue lam(3, 0, 0, Rational(1, 3));
    ALabel e = make_E(B3, lam, h(2));
    ALabel ed = a_dual(B3, e);
    CHECK(ed.w == canonicalize(B3, ALabel{ALabel::Kind::E, 1, 1, h(0),
                                          WeightValue::alpha_zero_w(3) - lam}).w);
    CHECK(ed.ell == h(-2));
    CHECK(a_dual(B3, ed) == e);
    // dual of a cover via class duality agrees with the direct formula
    ALabel q = make_Q(B3, 1, 2, h(1));
    AClass dual_class;
    for (const auto& [l, m] : a_class(B3, q)) dual_class[a_dual(B3, l)] += m;
    CHECK(a_peel(B3, dual_class) == single(a_dual(B3, q)));
}

TEST_CASE("loewy layers") {
    auto layers = loewy(B2, make_Q(B2, 1, 1, h(0)));
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == single(make_W(B2, 1, 1, h(0))));
    CHECK(layers[1] == make_object({{make_W(B2, 1, 1, h(-2)), 1}, {make_W(B2, 1, 1, h(2)), 1}}));
    CHECK(layers[2] == single(make_W(B2, 1, 1, h(0))));
    // simple projectives sit in one layer
    CHECK(loewy(B3, make_W(B3, 1, 3, h(0))).size() == 1);
    // S3: middles are SW2 at ell -/+ (p-2)/2 = -/+ 1/2
    auto s3 = loewy(S3, make_Q(S3, 1, 1, h(0)));
    CHECK(s3[1] == make_object({{make_W(S3, 1, 2, h(-1)), 1}, {make_W(S3, 1, 2, h(1)), 1}}));
}

TEST_CASE("r_J = 0 lattice extensions") {
    // A = V_L (x) M(p): r never moves, ell lives mod kappa, peel is r-keyed
    ExtensionData lat = ExtensionData::make(3, 0, 2);
    CHECK(make_W(lat, 5, 1, h(-1)).ell == h(3));
    ALabel q = make_Q(lat, 4, 1, h(2));
    AClass c = a_class(lat, q);
    CHECK(c[make_W(lat, 4, 1, h(2))] == 2);
    CHECK(c[make_W(lat, 3, 2, h(2))] == 1);
    CHECK(c[make_W(lat, 5, 2, h(2))] == 1);
    CHECK(a_peel(lat, c) == single(q));
    // fusion leaves the lattice part on ell, singlet part on (r,s)
    CHECK(fuse_simple(lat, make_W(lat, 2, 1, h(1)), make_W(lat, 3, 1, h(2)))
          == single(make_W(lat, 4, 1, h(3))));
    // monodromy sees only the ell parity
    CHECK(monodromy_exponent(lat, make_W(lat, 2, 2, h(1))) == Rational(1, 2));
    CHECK(sector(lat, make_W(lat, 2, 2, h(1))) == ASector::Twisted);
}

TEST_CASE("folded p = 8 algebra") {
    // p = 2k^2 with k = 2: the scalar ring collapses to Q, weights keep v
    ExtensionData f = ExtensionData::make(8, 2, 0);
    CHECK(f.lambdaJ_sq == Rational(-16));
    WeightValue w(8, 0, Rational(1, 3), 0); // normalizes to v = -2/3
    CHECK(w.u() == 0);
    CHECK(w.v() == Rational(-2, 3));
    ALabel e = make_E(f, w, h(0));
    auto lw = lowest_weight(f, e);
    CHECK(lw.bounded);
    CHECK(lw.value == QAlpha::rational(8, Rational(-49, 32))); // -(p-1)^2/4p
    // lattice points at s = p are detected through the folded value
    ALabel proj = make_E(f, WeightValue::alpha_rs(8, 1, 8), h(2));
    CHECK(proj.kind == ALabel::Kind::W);
    CHECK(proj.s == 8);
}

TEST_CASE("formal object ordering matches the printed convention") {
    FormalObject obj = make_object({
        {make_W(B3, 1, 3, h(4)), 1},
        {make_Q(B3, 1, 2, h(1)), 1},
        {make_W(B3, 1, 3, h(-2)), 1},
    });
    CHECK(formal_str(obj) == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]");
}
