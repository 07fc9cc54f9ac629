#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wfusion/format.hpp"
#include "wfusion/singlet.hpp"

using namespace wfusion;

namespace {

SingletLabel rnd_simple(std::mt19937_64& rng, int p) {
    if (rng() % 3 == 0) {
        for (;;) {
            Rational u(static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 3) + 1);
            Rational v(static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 3) + 1);
            WeightValue w(p, 0, u, v);
            if (!decompose_alpha(w).atypical) return make_fock(p, w);
        }
    }
    int r = static_cast<int>(rng() % 7) - 3;
    int s = static_cast<int>(rng() % p) + 1;
    return make_atypical(p, r, s);
}

SingletClass class_of_fused(int p, const SingletObject& obj, const SingletLabel& z) {
    // class-linear extension of fusion: expand projectives to classes first
    SingletClass out;
    for (const auto& [l, m] : obj.terms) {
        SingletClass cl = singlet_class(p, l);
        for (const auto& [f, fm] : cl)
            for (const auto& [g, gm] : singlet_class(p, singlet_fuse(p, f, z)))
                out[g] += m * fm * gm;
    }
    return out;
}

} // namespace

TEST_CASE("lowest conformal weights") {
    CHECK(singlet_h(2, make_atypical(2, 1, 1)) == QAlpha::rational(2, 0));
    // h_{1,2} at p = 2: -(2-1)/2 + 3/8 = -1/8
    CHECK(singlet_h(2, make_atypical(2, 1, 2)) == QAlpha::rational(2, Rational(-1, 8)));
    // typical -1/3 at p = 2: (1/2)(-1/3)(-1/3 - 1) = 2/9
    CHECK(singlet_h(2, make_fock(2, WeightValue(2, 0, Rational(-1, 3), 0)))
          == QAlpha::rational(2, Rational(2, 9)));
    // r <= 1 branch uses h_{2-r,s}
    CHECK(singlet_h(3, make_atypical(3, 0, 1)) == singlet_h(3, make_atypical(3, 2, 1)));
    CHECK_THROWS_AS(singlet_h(3, make_fock(3, WeightValue(3, 1, 0, Rational(1, 3)))), Error);
}

TEST_CASE("make_fock folds lattice points") {
    // alpha_{r,p} points are the simple projectives M[r,p]
    SingletLabel l = make_fock(3, WeightValue::alpha_rs(3, 2, 3));
    CHECK(l.kind == SingletLabel::Kind::M);
    CHECK(l.r == 2);
    CHECK(l.s == 3);
    CHECK_THROWS_AS(make_fock(3, WeightValue::alpha_rs(3, 2, 1)), Error);
}

TEST_CASE("atypical x atypical across the case boundary") {
    // p = 2: M12 x M12 has an empty first sum and P11 from the second
    auto p2 = singlet_fuse(2, make_atypical(2, 1, 2), make_atypical(2, 1, 2));
    CHECK(singlet_object_str(p2) == "1*P[1,1]");
    // p = 3: first sum gives M11, second hits k = p giving the simple M13
    auto p3 = singlet_fuse(3, make_atypical(3, 1, 2), make_atypical(3, 1, 2));
    CHECK(singlet_object_str(p3) == "1*M[1,1] (+) 1*M[1,3]");
    // unit
    auto unit = singlet_fuse(3, make_atypical(3, 1, 1), make_atypical(3, -2, 3));
    CHECK(unit == make_singlet_object({{make_atypical(3, -2, 3), 1}}));
}

TEST_CASE("atypical x typical") {
    // M[r,s] x F[w]: s Fock summands stepping by am
    WeightValue w(3, 0, Rational(1, 5), Rational(1, 5));
    auto got = singlet_fuse(3, make_atypical(3, 2, 2), make_fock(3, w));
    WeightValue base = w + WeightValue::alpha_rs(3, 2, 2);
    CHECK(got == make_singlet_object({{make_fock(3, base), 1},
                                      {make_fock(3, base.with_v_shift(1)), 1}}));
}

TEST_CASE("typical x typical, both branches") {
    int p = 3;
    WeightValue lam(p, 0, 0, Rational(1, 3));
    // atypical collision: mu = a0 + alpha_{2,1} - lam; s = 1 leaves the
    // second sum empty and the first sum walks 1, 3 with P_{2,3} = M[2,3]
    WeightValue mu = WeightValue::alpha_zero_w(p) + WeightValue::alpha_rs(p, 2, 1) - lam;
    auto col = singlet_fuse(p, make_fock(p, lam), make_fock(p, mu));
    CHECK(col == make_singlet_object({{make_proj_cover(p, 2, 1), 1},
                                      {make_atypical(p, 2, 3), 1}}));
    // generic: p Fock terms
    WeightValue nu(p, 0, 0, Rational(1, 7));
    auto gen = singlet_fuse(p, make_fock(p, lam), make_fock(p, nu));
    CHECK(gen.terms.size() == 3);
    for (const auto& [l, m] : gen.terms) CHECK(l.kind == SingletLabel::Kind::F);
}

TEST_CASE("duals") {
    CHECK(singlet_dual(2, make_atypical(2, 1, 1)) == make_atypical(2, 1, 1));
    CHECK(singlet_dual(5, make_atypical(5, 3, 2)) == make_atypical(5, -1, 2));
    CHECK(singlet_dual(2, make_proj_cover(2, 1, 1)) == make_proj_cover(2, 1, 1));
    // F -> F at a0 - lambda
    WeightValue lam(3, 0, Rational(1, 5), 0);
    CHECK(singlet_dual(3, make_fock(3, lam)).w == WeightValue::alpha_zero_w(3) - lam);
    std::mt19937_64 rng(3);
    for (int p : {2, 3, 4})
        for (int i = 0; i < 100; ++i) {
            SingletLabel l = rnd_simple(rng, p);
            CHECK(singlet_dual(p, singlet_dual(p, l)) == l);
        }
}

TEST_CASE("classes") {
    // Loewy diagram of P[1,1] at p = 2
    SingletClass c = singlet_class(2, make_proj_cover(2, 1, 1));
    CHECK(c[make_atypical(2, 1, 1)] == 2);
    CHECK(c[make_atypical(2, 0, 1)] == 1);
    CHECK(c[make_atypical(2, 2, 1)] == 1);
    // linear extension over multisets
    WeightValue lam(2, 0, Rational(1, 3), 0);
    auto obj = make_singlet_object({{make_fock(2, lam), 2}});
    CHECK(singlet_class(2, obj)[make_fock(2, lam)] == 2);
}

TEST_CASE("peel recovers projective multisets") {
    CHECK(singlet_peel(2, singlet_class(2, make_proj_cover(2, 1, 1)))
          == make_singlet_object({{make_proj_cover(2, 1, 1), 1}}));
    // a lone non-projective simple class is rejected
    SingletClass bad;
    bad[make_atypical(2, 1, 1)] = 1;
    CHECK_THROWS_AS(singlet_peel(2, bad), Error);
    // typicals peel as themselves
    WeightValue lam(2, 0, Rational(1, 3), 0);
    SingletClass typ;
    typ[make_fock(2, lam)] = 2;
    CHECK(singlet_peel(2, typ) == make_singlet_object({{make_fock(2, lam), 2}}));

    std::mt19937_64 rng(17);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 200; ++i) {
            std::vector<std::pair<SingletLabel, long long>> terms;
            int n = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < n; ++t) {
                SingletLabel l = rnd_simple(rng, p);
                if (l.kind == SingletLabel::Kind::M && l.s <= p - 1)
                    l = make_proj_cover(p, l.r, l.s);
                terms.emplace_back(l, 1 + static_cast<long long>(rng() % 3));
            }
            auto obj = make_singlet_object(std::move(terms));
            CHECK(singlet_peel(p, singlet_class(p, obj)) == obj);
        }
    }
}

TEST_CASE("fusion is commutative with unit M[1,1]") {
    std::mt19937_64 rng(5);
    for (int p : {2, 3, 4, 5}) {
        SingletLabel unit = make_atypical(p, 1, 1);
        for (int i = 0; i < 150; ++i) {
            SingletLabel x = rnd_simple(rng, p), y = rnd_simple(rng, p);
            CHECK(singlet_fuse(p, x, y) == singlet_fuse(p, y, x));
            CHECK(singlet_fuse(p, unit, x) == make_singlet_object({{x, 1}}));
        }
    }
}

TEST_CASE("dual is a class homomorphism") {
    std::mt19937_64 rng(9);
    for (int p : {2, 3, 4}) {
        for (int i = 0; i < 150; ++i) {
            SingletLabel x = rnd_simple(rng, p), y = rnd_simple(rng, p);
            SingletClass want;
            for (const auto& [l, m] : singlet_fuse(p, x, y).terms) {
                SingletLabel d = singlet_dual(p, l);
                for (const auto& [f, fm] : singlet_class(p, d)) want[f] += m * fm;
            }
            SingletClass got;
            for (const auto& [l, m] : singlet_fuse(p, singlet_dual(p, x), singlet_dual(p, y)).terms)
                for (const auto& [f, fm] : singlet_class(p, l)) got[f] += m * fm;
            CHECK(want == got);
        }
    }
}

TEST_CASE("associativity at class level") {
    std::mt19937_64 rng(23);
    for (int p = 2; p <= 6; ++p) {
        for (int i = 0; i < 500; ++i) {
            SingletLabel x = rnd_simple(rng, p), y = rnd_simple(rng, p), z = rnd_simple(rng, p);
            // [(x (x) y) (x) z] vs [x (x) (y (x) z)], all via classes
            SingletClass left = class_of_fused(p, singlet_fuse(p, x, y), z);
            SingletClass right;
            for (const auto& [l, m] : singlet_fuse(p, y, z).terms) {
                SingletClass cl = singlet_class(p, l);
                for (const auto& [f, fm] : cl)
                    for (const auto& [g, gm] : singlet_class(p, singlet_fuse(p, x, f)))
                        right[g] += m * fm * gm;
            }
            CHECK(left == right);
        }
    }
}
