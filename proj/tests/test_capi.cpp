#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "wfusion.h"

namespace {

struct Algebra {
    wf_algebra* a = nullptr;
    explicit Algebra(const char* spec) { REQUIRE(wf_algebra_new(spec, &a) == WF_OK); }
    ~Algebra() { wf_algebra_free(a); }
};

std::string take(char* s) {
    std::string out(s);
    wf_string_free(s);
    return out;
}

} // namespace

TEST_CASE("lifecycle and errors") {
    wf_algebra* a = nullptr;
    CHECK(wf_algebra_new("Bq:3", &a) == WF_ERR_PARSE);
    CHECK(std::string(wf_last_error()).find("ParseError") != std::string::npos);
    CHECK(wf_algebra_new(nullptr, &a) == WF_ERR_INVALID);
    REQUIRE(wf_algebra_new("Bp:3", &a) == WF_OK);
    char* out = nullptr;
    CHECK(wf_fuse(a, "W[1,2", "W[1,1,0]", WF_TEXT, &out) == WF_ERR_PARSE);
    CHECK(wf_enumerate(a, "hw", "everything", WF_TEXT, &out) == WF_ERR_PARSE);
    wf_algebra_free(a);
    // domain error: enumerating an infinite family
    Algebra s3("Sp:3");
    CHECK(wf_enumerate(s3.a, "gr", "all", WF_TEXT, &out) == WF_ERR_DOMAIN);
    CHECK(std::string(wf_last_error()).find("Infinite") != std::string::npos);
}

TEST_CASE("fuse matches the printed product") {
    Algebra b3("Bp:3");
    char* out = nullptr;
    REQUIRE(wf_fuse(b3.a, "W[1,2,1/2]", "Q[1,1,0]", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]");
    REQUIRE(wf_fuse(b3.a, "W[1,2,1/2]", "Q[1,1,0]", WF_JSON, &out) == WF_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["schema"] == "wfusion/1");
    CHECK(j["terms"].size() == 3);
}

TEST_CASE("classify payload") {
    Algebra b2("Bp:2");
    char* out = nullptr;
    REQUIRE(wf_classify(b2.a, "E[1/4,0]", WF_JSON, &out) == WF_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["lower_bounded"] == true);
    CHECK(j["grading_restricted"] == false);
    CHECK(j["lowest_weight"] == "-1/8");
}

TEST_CASE("enumerate, induce, translate and weights") {
    Algebra b23("B2orb:3");
    char* out = nullptr;
    REQUIRE(wf_enumerate(b23.a, "c1", "all", WF_JSON, &out) == WF_OK);
    CHECK(nlohmann::json::parse(take(out))["count"] == 3);

    Algebra b3("Bp:3");
    REQUIRE(wf_induce(b3.a, "3/2", "M[2,1]", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "W[1,1,3]");
    REQUIRE(wf_translate(b3.a, "sl2_fourthirds", "D+_{-2/3}", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "W[1,2,1/2]");
    REQUIRE(wf_translate(b3.a, "sl2_fourthirds", "W[1,2,1/2]", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "D+_{-2/3}");
    REQUIRE(wf_lowest_weight(b3.a, "W[1,1,1]", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "-1/3"); // border label at p = 3
    Algebra b2("Bp:2");
    REQUIRE(wf_lowest_weight(b2.a, "W[1,1,1]", WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "unbounded");
    REQUIRE(wf_summand_weight(b3.a, "W[1,1,0]", 3, WF_TEXT, &out) == WF_OK);
    CHECK(take(out) == "3");
}

TEST_CASE("table and verify") {
    Algebra b2("Bp:2");
    char* out = nullptr;
    REQUIRE(wf_table(b2.a, nullptr, 0, WF_CSV, &out) == WF_OK);
    std::string csv = take(out);
    CHECK(csv.find("W[1,1,0]") != std::string::npos);
    unsigned failures = 9;
    REQUIRE(wf_verify(b2.a, "unit", 25, 1, WF_JSON, &out, &failures) == WF_OK);
    std::string first = take(out);
    auto j = nlohmann::json::parse(first);
    CHECK(failures == 0);
    CHECK(j["failed"] == 0);
    // byte-identical rerun for a fixed (seed, samples, algebra)
    REQUIRE(wf_verify(b2.a, "unit", 25, 1, WF_JSON, &out, &failures) == WF_OK);
    CHECK(take(out) == first);
    REQUIRE(wf_literature(b2.a, "betagamma", WF_TEXT, &out, &failures) == WF_OK);
    CHECK(failures == 0);
    CHECK(take(out).find("pass") != std::string::npos);
}
