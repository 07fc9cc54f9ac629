#include "wfusion.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "wfusion/format.hpp"
#include "wfusion/verify.hpp"

using namespace wfusion;

struct wf_algebra {
    AlgebraSpec spec;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& kind, const std::string& message) {
    nlohmann::json j{{"kind", kind}, {"message", message}};
    g_last_error = j.dump();
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

wf_status status_for(const Error& e) {
    return e.kind() == "ParseError" ? WF_ERR_PARSE : WF_ERR_DOMAIN;
}

template <typename Fn>
wf_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        set_error(e.kind(), e.what());
        return status_for(e);
    } catch (const std::exception& e) {
        set_error("Internal", e.what());
        return WF_ERR_INTERNAL;
    }
}

wf_status need(const void* ptr, const char* what) {
    if (ptr) return WF_OK;
    set_error("InvalidArgument", std::string("null ") + what);
    return WF_ERR_INVALID;
}

nlohmann::json with_schema(nlohmann::json j) {
    j["schema"] = "wfusion/1";
    return j;
}

std::string payload(wf_format format, const std::string& text, nlohmann::json j) {
    if (format == WF_JSON) return with_schema(std::move(j)).dump();
    return text;
}

std::vector<std::vector<std::string>> label_table(const AlgebraSpec& spec,
                                                  const std::vector<ALabel>& labels) {
    const ExtensionData& ext = spec.ext;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"x"};
    for (const auto& l : labels) header.push_back(alabel_str(l));
    rows.push_back(std::move(header));
    for (const auto& a : labels) {
        std::vector<std::string> row{alabel_str(a)};
        for (const auto& b : labels) row.push_back(formal_str(fuse(ext, single(a), single(b))));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_rows(wf_format format, const std::vector<std::vector<std::string>>& rows) {
    switch (format) {
    case WF_CSV: return render_csv(rows);
    case WF_MARKDOWN: return render_markdown(rows);
    case WF_JSON: {
        nlohmann::json j = with_schema({{"rows", rows}});
        return j.dump();
    }
    case WF_TEXT:
    default: {
        std::ostringstream os;
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
            os << "\n";
        }
        return os.str();
    }
    }
}

} // namespace

extern "C" {

const char* wf_version(void) { return "1.0.0"; }

const char* wf_last_error(void) { return g_last_error.c_str(); }

void wf_string_free(char* s) { std::free(s); }

wf_status wf_algebra_new(const char* spec, wf_algebra** out) {
    if (auto st = need(spec, "spec"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        auto* a = new wf_algebra{parse_algebra(spec)};
        *out = a;
        return WF_OK;
    });
}

void wf_algebra_free(wf_algebra* algebra) { delete algebra; }

wf_status wf_algebra_describe(const wf_algebra* algebra, wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& e = algebra->spec.ext;
        std::ostringstream os;
        os << algebra->spec.name << ": p=" << e.p << " r_J=" << e.r_J << " kappa=" << e.kappa
           << " lambdaJ^2=" << rat_str(e.lambdaJ_sq)
           << (e.half_integer_graded ? " (1/2)Z-graded" : " Z-graded");
        nlohmann::json j{{"algebra", algebra->spec.name},
                         {"p", e.p},
                         {"r_J", e.r_J},
                         {"kappa", e.kappa},
                         {"lambdaJ_sq", rat_str(e.lambdaJ_sq)},
                         {"half_integer_graded", e.half_integer_graded}};
        *out = dup_string(payload(format, os.str(), std::move(j)));
        return WF_OK;
    });
}

wf_status wf_canonical(const wf_algebra* algebra, const char* label, wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(label, "label"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        ALabel l = parse_alabel(algebra->spec.ext, label);
        *out = dup_string(payload(format, alabel_str(l), {{"label", alabel_json(l)}}));
        return WF_OK;
    });
}

wf_status wf_fuse(const wf_algebra* algebra, const char* lhs, const char* rhs, wf_format format,
                  char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(lhs, "lhs"); st != WF_OK) return st;
    if (auto st = need(rhs, "rhs"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        FormalObject product = fuse(ext, single(parse_alabel(ext, lhs)),
                                    single(parse_alabel(ext, rhs)));
        *out = dup_string(payload(format, formal_str(product), formal_json(product)));
        return WF_OK;
    });
}

wf_status wf_dual(const wf_algebra* algebra, const char* label, wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(label, "label"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        ALabel d = a_dual(ext, parse_alabel(ext, label));
        *out = dup_string(payload(format, alabel_str(d), {{"label", alabel_json(d)}}));
        return WF_OK;
    });
}

wf_status wf_classify(const wf_algebra* algebra, const char* label, wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(label, "label"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        ALabel l = parse_alabel(ext, label);
        if (!l.is_simple()) throw Error("BadLabel", "classify takes a simple label");
        GradingReport rep = classify(ext, l);
        *out = dup_string(payload(format, report_text(rep), report_json(rep)));
        return WF_OK;
    });
}

wf_status wf_lowest_weight(const wf_algebra* algebra, const char* label, wf_format format,
                           char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(label, "label"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        LowestWeight lw = lowest_weight(ext, parse_alabel(ext, label));
        std::string text = lw.bounded ? qalpha_str(lw.value) : "unbounded";
        nlohmann::json j{{"bounded", lw.bounded}};
        j["lowest_weight"] = lw.bounded ? nlohmann::json(qalpha_str(lw.value)) : nlohmann::json(nullptr);
        *out = dup_string(payload(format, text, std::move(j)));
        return WF_OK;
    });
}

wf_status wf_summand_weight(const wf_algebra* algebra, const char* label, long n, wf_format format,
                            char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(label, "label"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        QAlpha w = summand_weight(ext, parse_alabel(ext, label), n);
        *out = dup_string(payload(format, qalpha_str(w), {{"n", n}, {"weight", qalpha_str(w)}}));
        return WF_OK;
    });
}

wf_status wf_enumerate(const wf_algebra* algebra, const char* predicate, const char* sector_filter,
                       wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(predicate, "predicate"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        std::string pred(predicate);
        Predicate p;
        if (pred == "hw") p = Predicate::HighestWeight;
        else if (pred == "gr") p = Predicate::GradingRestricted;
        else if (pred == "c1") p = Predicate::C1;
        else throw ParseError("unknown predicate '" + pred + "' (use hw, gr or c1)");
        std::string want(sector_filter ? sector_filter : "all");
        if (want != "all" && want != "local" && want != "twisted")
            throw ParseError("unknown sector '" + want + "' (use local, twisted or all)");
        std::vector<ALabel> labels;
        for (const auto& l : enumerate_simples(ext, p)) {
            ASector s = sector(ext, l);
            if (want == "local" && s != ASector::Local) continue;
            if (want == "twisted" && s != ASector::Twisted) continue;
            labels.push_back(l);
        }
        std::ostringstream os;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : labels) {
            os << alabel_str(l) << "\t"
               << (sector(ext, l) == ASector::Local ? "local" : "twisted") << "\n";
            arr.push_back({{"label", alabel_json(l)},
                           {"text", alabel_str(l)},
                           {"sector", sector(ext, l) == ASector::Local ? "local" : "twisted"}});
        }
        nlohmann::json j{{"count", labels.size()}, {"labels", arr}};
        *out = dup_string(payload(format, os.str(), std::move(j)));
        return WF_OK;
    });
}

wf_status wf_induce(const wf_algebra* algebra, const char* heisenberg, const char* singlet,
                    wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(heisenberg, "heisenberg"); st != WF_OK) return st;
    if (auto st = need(singlet, "singlet"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        WeightValue g = parse_weight(ext.p, heisenberg);
        SingletLabel m = parse_singlet_label(ext.p, singlet);
        ALabel l = induce(ext, g, m);
        *out = dup_string(payload(format, alabel_str(l), {{"label", alabel_json(l)}}));
        return WF_OK;
    });
}

wf_status wf_translate(const wf_algebra* algebra, const char* dialect, const char* text,
                       wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(dialect, "dialect"); st != WF_OK) return st;
    if (auto st = need(text, "text"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        auto d = dialect_from_name(dialect);
        if (!d) throw ParseError("unknown dialect '" + std::string(dialect) + "'");
        // core labels start with K[...]; anything else is a literature name
        std::string t(text);
        bool is_core = t.size() > 1 && (t[0] == 'W' || t[0] == 'E' || t[0] == 'Q') && t[1] == '[';
        if (is_core) {
            ALabel l = parse_alabel(algebra->spec.ext, t);
            std::string name = core_to_lit(algebra->spec, *d, l);
            *out = dup_string(payload(format, name, {{"literature", name}, {"label", alabel_json(l)}}));
        } else {
            ALabel l = lit_to_core(algebra->spec, *d, t);
            *out = dup_string(
                payload(format, alabel_str(l), {{"literature", t}, {"label", alabel_json(l)}}));
        }
        return WF_OK;
    });
}

wf_status wf_literature(const wf_algebra* algebra, const char* dialect_or_null, wf_format format,
                        char** out, unsigned* failures) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        std::vector<IdentityCheck> checks;
        if (dialect_or_null) {
            auto d = dialect_from_name(dialect_or_null);
            if (!d) throw ParseError("unknown dialect '" + std::string(dialect_or_null) + "'");
            checks = reproduce_literature(algebra->spec, *d);
        } else {
            checks = reproduce_literature(algebra->spec);
        }
        unsigned bad = 0;
        std::ostringstream os;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            if (!c.passed) ++bad;
            os << (c.passed ? "pass" : "FAIL") << "\t" << c.name << "\t" << c.lhs << "\n";
            arr.push_back({{"name", c.name}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        }
        if (failures) *failures = bad;
        nlohmann::json j{{"checked", checks.size()}, {"failed", bad}, {"identities", arr}};
        *out = dup_string(payload(format, os.str(), std::move(j)));
        return WF_OK;
    });
}

wf_status wf_table(const wf_algebra* algebra, const char* const* labels, size_t n_labels,
                   wf_format format, char** out) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        const ExtensionData& ext = algebra->spec.ext;
        std::vector<ALabel> ls;
        if (labels && n_labels > 0) {
            for (size_t i = 0; i < n_labels; ++i) ls.push_back(parse_alabel(ext, labels[i]));
        } else {
            ls = enumerate_simples(ext, Predicate::GradingRestricted);
        }
        *out = dup_string(render_rows(format, label_table(algebra->spec, ls)));
        return WF_OK;
    });
}

wf_status wf_verify(const wf_algebra* algebra, const char* suite_or_null, unsigned samples,
                    unsigned long long seed, wf_format format, char** out, unsigned* failures) {
    if (auto st = need(algebra, "algebra"); st != WF_OK) return st;
    if (auto st = need(out, "out"); st != WF_OK) return st;
    return guarded([&]() {
        std::vector<Suite> suites;
        if (suite_or_null) {
            auto s = suite_from_name(suite_or_null);
            if (!s) throw ParseError("unknown suite '" + std::string(suite_or_null) + "'");
            suites.push_back(*s);
        } else {
            suites = all_suites();
        }
        unsigned bad = 0;
        std::ostringstream os;
        nlohmann::json arr = nlohmann::json::array();
        for (Suite s : suites) {
            SuiteConfig cfg;
            cfg.suite = s;
            cfg.samples = static_cast<int>(samples);
            cfg.seed = seed;
            cfg.algebra = algebra->spec;
            SuiteReport rep = run_suite(cfg);
            bad += static_cast<unsigned>(rep.failed);
            os << suite_name(s) << "\tpassed=" << rep.passed << "\tfailed=" << rep.failed;
            nlohmann::json jr{{"suite", suite_name(s)},
                              {"passed", rep.passed},
                              {"failed", rep.failed}};
            if (rep.first_failure) {
                os << "\tfirst_failure: " << rep.first_failure->inputs << " expected "
                   << rep.first_failure->expected << " got " << rep.first_failure->got;
                jr["first_failure"] = {{"inputs", rep.first_failure->inputs},
                                       {"expected", rep.first_failure->expected},
                                       {"got", rep.first_failure->got}};
            }
            os << "\n";
            arr.push_back(std::move(jr));
        }
        if (failures) *failures = bad;
        nlohmann::json j{{"algebra", algebra->spec.name},
                         {"seed", seed},
                         {"samples", samples},
                         {"failed", bad},
                         {"suites", arr}};
        *out = dup_string(payload(format, os.str(), std::move(j)));
        return WF_OK;
    });
}

} // extern "C"
