#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wfusion/catalog.hpp"
#include "wfusion/format.hpp"
#include "wfusion/verify.hpp"

using namespace wfusion;

TEST_CASE("weight grammar") {
    WeightValue w = parse_weight(3, "2*e + 1/2 - 3/4*am");
    CHECK(w.eps() == Rational(2));
    CHECK(w.u() == Rational(1, 2));
    CHECK(w.v() == Rational(-3, 4));
    CHECK(parse_weight(3, "e") == WeightValue(3, 1, 0, 0));
    CHECK(parse_weight(3, "-am") == WeightValue(3, 0, 0, -1));
    CHECK(parse_weight(3, "0") == WeightValue::zero(3));
    CHECK(parse_weight(2, "1/4") == WeightValue(2, 0, Rational(1, 4), 0));
    CHECK_THROWS_AS(parse_weight(3, "1 +"), ParseError);
    CHECK_THROWS_AS(parse_weight(3, "x"), ParseError);
    CHECK_THROWS_AS(parse_weight(3, ""), ParseError);
    CHECK_THROWS_AS(parse_weight(3, "2*q"), ParseError);
}

TEST_CASE("weight printing folds square cases") {
    // p = 2: am = -1, printed as a plain rational
    CHECK(weight_str(parse_weight(2, "1/4")) == "1/4");
    CHECK(weight_str(parse_weight(2, "e - 3/4")) == "e - 3/4");
    CHECK(weight_str(parse_weight(3, "1/2 - 3/4*am")) == "1/2 - 3/4*am");
    CHECK(weight_str(WeightValue::zero(3)) == "0");
}

TEST_CASE("label grammar") {
    ExtensionData b3 = parse_algebra("Bp:3").ext;
    CHECK(parse_alabel(b3, "W[1,2,1/2]") == make_W(b3, 1, 2, HalfInt::from_doubled(1)));
    CHECK(parse_alabel(b3, "Q[1,1,0]") == make_Q(b3, 1, 1, HalfInt()));
    CHECK(parse_alabel(b3, " E[ 1/3*am , -3/2 ] ").kind == ALabel::Kind::E);
    // labels canonicalize on parse
    CHECK(alabel_str(parse_alabel(b3, "W[4,1,2]")) == "W[1,1,2]");
    CHECK_THROWS_AS(parse_alabel(b3, "W[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_alabel(b3, "W[1,9,0]"), Error);
    CHECK_THROWS_AS(parse_alabel(b3, "Z[1,1,0]"), ParseError);
    CHECK(parse_singlet_label(3, "M[2,3]") == make_atypical(3, 2, 3));
    CHECK(parse_singlet_label(3, "P[0,1]") == make_proj_cover(3, 0, 1));
    CHECK(parse_singlet_label(3, "F[1/5]").kind == SingletLabel::Kind::F);
}

TEST_CASE("every printed label re-parses to an equal label") {
    std::mt19937_64 rng(41);
    for (const char* name : {"Bp:2", "Bp:3", "Bp:5", "B2orb:3", "Sp:3", "S2orb:2",
                             "custom:p=8,rJ=2,kappa=0", "custom:p=3,rJ=0,kappa=2"}) {
        AlgebraSpec spec = parse_algebra(name);
        for (int i = 0; i < 200; ++i) {
            ALabel l = random_label(rng, spec.ext);
            if (l.kind == ALabel::Kind::W && l.s < spec.ext.p && i % 3 == 0)
                l = make_Q(spec.ext, l.r, l.s, l.ell);
            CHECK(parse_alabel(spec.ext, alabel_str(l)) == l);
        }
    }
}

TEST_CASE("formal object rendering") {
    ExtensionData b3 = parse_algebra("Bp:3").ext;
    FormalObject obj = make_object({{make_W(b3, 1, 1, HalfInt()), 2},
                                    {make_W(b3, 1, 3, HalfInt::whole(-1)), 1}});
    CHECK(formal_str(obj) == "2*W[1,1,0] (+) 1*W[1,3,-1]");
    auto j = formal_json(obj);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["mult"] == 2);
    CHECK(j["terms"][0]["label"]["kind"] == "W");
    CHECK(j["terms"][0]["label"]["ell2"] == 0);
}

TEST_CASE("parsers reject garbage without crashing") {
    ExtensionData b3 = parse_algebra("Bp:3").ext;
    std::mt19937_64 rng(99);
    const std::string alphabet = "WEQMFPe am[]{}()+-*/,0123456789lsigma^_";
    for (int i = 0; i < 4000; ++i) {
        std::string s;
        int len = 1 + static_cast<int>(rng() % 18);
        for (int k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
        // anything goes, as long as it's a clean Error and not a crash
        try { (void)parse_alabel(b3, s); } catch (const Error&) {}
        try { (void)parse_weight(3, s); } catch (const Error&) {}
        try { (void)parse_singlet_label(3, s); } catch (const Error&) {}
        try { (void)parse_algebra(s); } catch (const Error&) {}
    }
}

TEST_CASE("csv and markdown rendering") {
    std::vector<std::vector<std::string>> rows{{"x", "a,b"}, {"1", "two"}};
    CHECK(render_csv(rows) == "x,\"a,b\"\n1,two\n");
    std::string md = render_markdown(rows);
    CHECK(md.find("| x | a,b |") != std::string::npos);
    CHECK(md.find("| --- | --- |") != std::string::npos);
}
