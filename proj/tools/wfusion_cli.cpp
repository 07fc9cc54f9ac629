// Command-line front end. Talks to the core exclusively through the C API
// in wfusion.h, the same surface other language bindings would use.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wfusion.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct AlgebraHandle {
    wf_algebra* ptr = nullptr;
    ~AlgebraHandle() { wf_algebra_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { wf_string_free(ptr); }
};

int exit_code(wf_status st) {
    switch (st) {
    case WF_OK: return kExitOk;
    case WF_ERR_PARSE: return kExitParse;
    case WF_ERR_DOMAIN: return kExitDomain;
    default: return kExitDomain;
    }
}

// errors are values on the user-facing surface: one JSON object on stderr
int report_error(wf_status st) {
    const char* detail = wf_last_error();
    std::cerr << "{\"schema\":\"wfusion/1\",\"error\":" << (detail && *detail ? detail : "{}")
              << "}\n";
    return exit_code(st);
}

wf_format parse_format(const std::string& name) {
    if (name == "text") return WF_TEXT;
    if (name == "json") return WF_JSON;
    if (name == "csv") return WF_CSV;
    if (name == "md") return WF_MARKDOWN;
    std::cerr << "{\"schema\":\"wfusion/1\",\"error\":{\"kind\":\"ParseError\",\"message\":"
              << "\"unknown format '" << name << "'\"}}\n";
    std::exit(kExitParse);
}

int emit(wf_status st, const OwnedString& s) {
    if (st != WF_OK) return report_error(st);
    std::string text(s.ptr);
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion calculator for simple current extensions of "
                 "Heisenberg x singlet vertex algebras"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string algebra = "Bp:2";
    std::string format_name;
    if (const char* env = std::getenv("WFUSION_FORMAT")) format_name = env;
    if (format_name.empty()) format_name = "text";
    app.add_option("--algebra,-a", algebra, "algebra specifier, e.g. Bp:3, B2orb:2, Sp:3, "
                                            "S2orb:2, custom:p=3,rJ=2,kappa=0")
        ->capture_default_str();
    app.add_option("--format,-f", format_name, "output format: text, json, csv, md")
        ->capture_default_str();
    unsigned samples = 1000;
    unsigned long long seed = 0;
    app.add_option("--samples", samples, "cases per sampled verify suite")->capture_default_str();
    app.add_option("--seed", seed, "master seed for sampled suites")->capture_default_str();

    std::vector<std::string> labels;
    std::string label, lhs, rhs, predicate = "gr", sector = "all", dialect, heis, singlet, suite;
    long summand_n = 0;
    bool have_summand = false;

    auto* c_describe = app.add_subcommand("describe", "show the extension data of the algebra");
    auto* c_fuse = app.add_subcommand("fuse", "tensor product of two module labels");
    c_fuse->add_option("lhs", lhs, "left label")->required();
    c_fuse->add_option("rhs", rhs, "right label")->required();
    auto* c_dual = app.add_subcommand("dual", "contragredient dual of a label");
    c_dual->add_option("label", label)->required();
    auto* c_classify = app.add_subcommand("classify", "conformal-weight classification flags");
    c_classify->add_option("label", label)->required();
    auto* c_weight = app.add_subcommand("weight", "lowest conformal weight (or one summand)");
    c_weight->add_option("label", label)->required();
    c_weight->add_option("--summand,-n", summand_n, "weight of the n-th Heisenberg summand")
        ->each([&](const std::string&) { have_summand = true; });
    auto* c_enum = app.add_subcommand("enumerate", "list simples satisfying a predicate");
    c_enum->add_option("--predicate,-p", predicate, "hw, gr or c1")->capture_default_str();
    c_enum->add_option("--sector,-s", sector, "local, twisted or all")->capture_default_str();
    auto* c_induce = app.add_subcommand("induce", "induce an H x M(p) label to the extension");
    c_induce->add_option("heisenberg", heis, "gamma*lambda_J in the weight grammar")->required();
    c_induce->add_option("singlet", singlet, "M[r,s], F[w] or P[r,s]")->required();
    auto* c_translate = app.add_subcommand("translate", "literature name <-> core label");
    c_translate->add_option("--dialect,-d", dialect,
                            "betagamma, sl2_half, sl2_fourthirds, BP_53, BP_94")
        ->required();
    c_translate->add_option("text", label, "literature name or core label")->required();
    auto* c_table = app.add_subcommand("table", "fusion table (GR simples or a label list)");
    c_table->add_option("labels", labels, "labels; empty = grading-restricted simples");
    auto* c_verify = app.add_subcommand("verify", "run property-test suites");
    c_verify->add_option("--suite", suite, "one suite name; default all");
    auto* c_lit = app.add_subcommand("literature", "recompute the printed literature identities");
    c_lit->add_option("--dialect,-d", dialect, "restrict to one dialect");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "{\"schema\":\"wfusion/1\",\"error\":{\"kind\":\"ParseError\",\"message\":\""
                  << e.what() << "\"}}\n";
        return kExitParse;
    }
    wf_format format = parse_format(format_name);

    AlgebraHandle alg;
    if (wf_status st = wf_algebra_new(algebra.c_str(), &alg.ptr); st != WF_OK)
        return report_error(st);

    OwnedString out;
    if (c_describe->parsed())
        return emit(wf_algebra_describe(alg.ptr, format, &out.ptr), out);
    if (c_fuse->parsed())
        return emit(wf_fuse(alg.ptr, lhs.c_str(), rhs.c_str(), format, &out.ptr), out);
    if (c_dual->parsed())
        return emit(wf_dual(alg.ptr, label.c_str(), format, &out.ptr), out);
    if (c_classify->parsed())
        return emit(wf_classify(alg.ptr, label.c_str(), format, &out.ptr), out);
    if (c_weight->parsed()) {
        if (have_summand)
            return emit(wf_summand_weight(alg.ptr, label.c_str(), summand_n, format, &out.ptr), out);
        return emit(wf_lowest_weight(alg.ptr, label.c_str(), format, &out.ptr), out);
    }
    if (c_enum->parsed())
        return emit(wf_enumerate(alg.ptr, predicate.c_str(), sector.c_str(), format, &out.ptr), out);
    if (c_induce->parsed())
        return emit(wf_induce(alg.ptr, heis.c_str(), singlet.c_str(), format, &out.ptr), out);
    if (c_translate->parsed())
        return emit(wf_translate(alg.ptr, dialect.c_str(), label.c_str(), format, &out.ptr), out);
    if (c_table->parsed()) {
        std::vector<const char*> ptrs;
        ptrs.reserve(labels.size());
        for (const auto& l : labels) ptrs.push_back(l.c_str());
        return emit(wf_table(alg.ptr, ptrs.empty() ? nullptr : ptrs.data(), ptrs.size(), format,
                             &out.ptr),
                    out);
    }
    if (c_verify->parsed()) {
        unsigned failures = 0;
        wf_status st = wf_verify(alg.ptr, suite.empty() ? nullptr : suite.c_str(), samples, seed,
                                 format, &out.ptr, &failures);
        int code = emit(st, out);
        if (code != kExitOk) return code;
        if (failures > 0) {
            std::cerr << "{\"schema\":\"wfusion/1\",\"error\":{\"kind\":\"VerificationFailed\","
                      << "\"message\":\"" << failures << " case(s) failed\"}}\n";
            return kExitDomain;
        }
        return kExitOk;
    }
    if (c_lit->parsed()) {
        unsigned failures = 0;
        wf_status st = wf_literature(alg.ptr, dialect.empty() ? nullptr : dialect.c_str(), format,
                                     &out.ptr, &failures);
        int code = emit(st, out);
        if (code != kExitOk) return code;
        if (failures > 0) {
            std::cerr << "{\"schema\":\"wfusion/1\",\"error\":{\"kind\":\"VerificationFailed\","
                      << "\"message\":\"" << failures << " identity(ies) failed\"}}\n";
            return kExitDomain;
        }
        return kExitOk;
    }
    return kExitParse;
}
