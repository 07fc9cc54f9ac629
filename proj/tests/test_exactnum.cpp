#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wfusion/qalpha.hpp"

using namespace wfusion;

namespace {

QAlpha rnd_qalpha(std::mt19937_64& rng, int p) {
    auto num = [&]() { return static_cast<long long>(rng() % 13) - 6; };
    auto den = [&]() { return static_cast<long long>(rng() % 4) + 1; };
    return QAlpha(p, Rational(num(), den()), Rational(num(), den()));
}

// independent check of the exact sign: evaluate u - v*sqrt(2/p) in long
// double, decisive away from zero
int approx_sign(const QAlpha& x) {
    long double u = static_cast<long double>(rat_num(x.u())) / static_cast<long double>(rat_den(x.u()));
    long double v = static_cast<long double>(rat_num(x.v())) / static_cast<long double>(rat_den(x.v()));
    long double val = u - v * std::sqrt(2.0L / x.p());
    if (val > 1e-9L) return 1;
    if (val < -1e-9L) return -1;
    return 0;
}

} // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("+7/3") == Rational(7, 3));
    CHECK(parse_rational("09") == Rational(9)); // no octal surprises
    CHECK(parse_rational("007/010") == Rational(7, 10));
    CHECK(parse_rational("000") == Rational(0));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("half integers") {
    CHECK(parse_halfint("3/2").doubled() == 3);
    CHECK(parse_halfint("-2").doubled() == -4);
    CHECK_THROWS_AS(parse_halfint("1/3"), ParseError);
    CHECK(HalfInt::from_doubled(5).str() == "5/2");
    CHECK(HalfInt::whole(-2).str() == "-2");
    CHECK(!HalfInt::from_rational(Rational(1, 4)).has_value());
}

TEST_CASE("defining relation and alpha_plus rewriting") {
    // am * am = 2/p
    QAlpha am3 = QAlpha::alpha_minus(3);
    CHECK(am3 * am3 == QAlpha::rational(3, Rational(2, 3)));
    // a+ * am = (-p*am)*am = -2 at p = 5
    CHECK(QAlpha::alpha_plus(5) * QAlpha::alpha_minus(5) == QAlpha::rational(5, -2));
    // fold at p = 2: am = -1, so (1 + am)^2 = 0
    QAlpha x = QAlpha::rational(2, 1) + QAlpha::alpha_minus(2);
    CHECK((x * x).is_zero());
    CHECK(fold_k(2) == 1);
    CHECK(fold_k(8) == 2);
    CHECK(fold_k(3) == 0);
    CHECK(fold_k(4) == 0);
}

TEST_CASE("division") {
    QAlpha a(3, Rational(1, 2), Rational(-2, 3));
    QAlpha b(3, Rational(2), Rational(1, 5));
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / QAlpha::rational(3, 0), Error);
    QAlpha c(2, Rational(3), Rational(1)); // folds to 2
    CHECK(a.p() == 3);
    CHECK((c / QAlpha::rational(2, 4)) == QAlpha::rational(2, Rational(1, 2)));
}

TEST_CASE("sign") {
    CHECK(QAlpha::alpha_minus(3).sign() == -1);
    CHECK((QAlpha::rational(2, 1) + QAlpha::alpha_minus(2)).sign() == 0);
    CHECK((QAlpha::rational(2, 2) + QAlpha::alpha_minus(2)).sign() == 1);
    // 1 - am > 0 and am - 1 < 0 for every p
    for (int p : {2, 3, 4, 5, 6, 7}) {
        CHECK((QAlpha::rational(p, 1) - QAlpha::alpha_minus(p)).sign() == 1);
        CHECK((QAlpha::alpha_minus(p) - QAlpha::rational(p, 1)).sign() == -1);
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5, 8}) {
        for (int i = 0; i < 300; ++i) {
            QAlpha a = rnd_qalpha(rng, p), b = rnd_qalpha(rng, p), c = rnd_qalpha(rng, p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("sign is a total order compatible with +") {
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 300; ++i) {
            QAlpha a = rnd_qalpha(rng, p), b = rnd_qalpha(rng, p), c = rnd_qalpha(rng, p);
            int s = (a - b).sign();
            CHECK((b - a).sign() == -s);                       // antisymmetry
            CHECK(((a + c) - (b + c)).sign() == s);            // translation invariance
            if ((a - b).sign() >= 0 && (b - c).sign() >= 0)    // transitivity
                CHECK((a - c).sign() >= 0);
            int approx = approx_sign(a - b);
            if (approx != 0) CHECK(approx == s); // numeric cross-check
        }
    }
}

TEST_CASE("decompose_alpha") {
    // w = 0 is alpha_{1,1}
    auto d = decompose_alpha(WeightValue::zero(3));
    CHECK(d.atypical);
    CHECK(d.r == 1);
    CHECK(d.s == 1);
    // w = -am/2 solves 2v = -1, giving (1,2) for every p
    for (int p : {2, 3, 4, 5, 6, 7}) {
        auto e = decompose_alpha(WeightValue(p, 0, 0, Rational(-1, 2)));
        CHECK(e.atypical);
        CHECK(e.r == 1);
        CHECK(e.s == 2);
    }
    // generic symbol present: typical
    CHECK(!decompose_alpha(WeightValue(3, 1, 0, 1)).atypical);
    // off-lattice
    CHECK(!decompose_alpha(WeightValue(3, 0, Rational(1, 3), 0)).atypical);
    CHECK(!decompose_alpha(WeightValue(3, 0, 0, Rational(1, 3))).atypical);
}

TEST_CASE("decompose inverts alpha_rs for all small r, s, p") {
    for (int p = 2; p <= 7; ++p)
        for (int r = -10; r <= 10; ++r)
            for (int s = 1; s <= p; ++s) {
                auto d = decompose_alpha(WeightValue::alpha_rs(p, r, s));
                CHECK(d.atypical);
                CHECK(d.r == r);
                CHECK(d.s == s);
            }
}

TEST_CASE("folded weights keep lattice coordinates") {
    // same numeric value, different entry coordinates, one normal form
    WeightValue a(2, 0, Rational(1, 4), 0);
    WeightValue b(2, 0, 0, Rational(-1, 4));
    CHECK(a == b);
    CHECK(a.u() == 0);
    // a half-integer value at p = 2 is the lattice point alpha_{r,2}
    auto d = decompose_alpha(WeightValue(2, 0, Rational(1, 2), 0));
    CHECK(d.atypical);
    CHECK(d.s == 2);
}

TEST_CASE("weight epsilon is transcendental for equality") {
    WeightValue a(3, 1, 0, 0);
    WeightValue b(3, 0, 0, 0);
    CHECK(a != b);
    CHECK(a + b == a);
    CHECK((a - a) == WeightValue::zero(3));
}
