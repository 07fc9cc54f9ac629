#include "wfusion/verify.hpp"

#include <array>
#include <functional>

#include "wfusion/format.hpp"

namespace wfusion {

std::vector<Suite> all_suites() {
    return {Suite::Commutativity,   Suite::AssociativityClass, Suite::AssociativityObject,
            Suite::Unit,            Suite::DualInvolution,     Suite::DualHom,
            Suite::SpectralFlow,    Suite::SectorAdditivity,   Suite::MonoidalInduction,
            Suite::PeelRoundtrip,   Suite::Counts,             Suite::BorderWeight,
            Suite::MonodromySector, Suite::C1Subring,          Suite::LiteratureAll};
}

std::string suite_name(Suite s) {
    switch (s) {
    case Suite::Commutativity: return "commutativity";
    case Suite::AssociativityClass: return "associativity_class";
    case Suite::AssociativityObject: return "associativity_object";
    case Suite::Unit: return "unit";
    case Suite::DualInvolution: return "dual_involution";
    case Suite::DualHom: return "dual_hom";
    case Suite::SpectralFlow: return "spectral_flow";
    case Suite::SectorAdditivity: return "sector_additivity";
    case Suite::MonoidalInduction: return "monoidal_induction";
    case Suite::PeelRoundtrip: return "peel_roundtrip";
    case Suite::Counts: return "counts";
    case Suite::BorderWeight: return "border_weight";
    case Suite::MonodromySector: return "monodromy_sector";
    case Suite::C1Subring: return "c1_subring";
    case Suite::LiteratureAll: return "literature";
    }
    return {};
}

std::optional<Suite> suite_from_name(const std::string& name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational small_rational(std::mt19937_64& rng) {
    long long num = draw(rng, -3, 3);
    long long den = draw(rng, 1, 3);
    return Rational(num, den);
}

} // namespace

std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

ALabel random_label(std::mt19937_64& rng, const ExtensionData& ext,
                    const LabelConstraints& constraints) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        bool want_E = constraints.kind ? *constraints.kind == ALabel::Kind::E
                                       : draw(rng, 0, 2) == 0;
        long long span = 2ll * ext.r_J * ext.p + 4;
        HalfInt ell = HalfInt::from_doubled(draw(rng, -span, span));
        ALabel l;
        if (want_E) {
            Rational g = constraints.eps_free ? Rational(0) : Rational(draw(rng, 0, 1));
            WeightValue w(ext.p, g, small_rational(rng), small_rational(rng));
            if (!w.has_eps() && decompose_alpha(w).atypical) continue;
            l = make_E(ext, w, ell);
        } else {
            int r = static_cast<int>(draw(rng, 1, std::max(ext.r_J, 3)));
            int s = static_cast<int>(draw(rng, 1, ext.p));
            l = make_W(ext, r, s, ell);
        }
        if (constraints.sector && sector(ext, l) != *constraints.sector) continue;
        return l;
    }
    throw Error("OutOfRange", "random_label: constraints unsatisfiable");
}

namespace {

// draws a pair, forcing an atypical collision in ~10% of E x E draws so the
// fusion case boundaries all get exercised
std::pair<ALabel, ALabel> random_pair(std::mt19937_64& rng, const ExtensionData& ext,
                                      bool eps_free = false) {
    LabelConstraints c;
    c.eps_free = eps_free;
    ALabel x = random_label(rng, ext, c);
    ALabel y = random_label(rng, ext, c);
    if (x.kind == ALabel::Kind::E && y.kind == ALabel::Kind::E && draw(rng, 0, 9) == 0) {
        int r = static_cast<int>(draw(rng, -1, 2));
        int s = static_cast<int>(draw(rng, 1, ext.p));
        WeightValue target = WeightValue::alpha_zero_w(ext.p) + WeightValue::alpha_rs(ext.p, r, s);
        WeightValue mu = target - x.w;
        if (!mu.has_eps() && decompose_alpha(mu).atypical) return {x, y};
        y = make_E(ext, mu, y.ell);
    }
    return {x, y};
}

// occasionally replace a simple by a projective label over the same data
FormalObject maybe_projective(std::mt19937_64& rng, const ExtensionData& ext, const ALabel& l) {
    if (l.kind == ALabel::Kind::W && l.s <= ext.p - 1 && draw(rng, 0, 3) == 0)
        return single(make_Q(ext, l.r, l.s, l.ell));
    return single(l);
}

FormalObject random_projective_sum(std::mt19937_64& rng, const ExtensionData& ext) {
    std::vector<std::pair<ALabel, long long>> terms;
    int n = static_cast<int>(draw(rng, 1, 4));
    for (int i = 0; i < n; ++i) {
        ALabel l = random_label(rng, ext, {});
        if (l.kind == ALabel::Kind::W && l.s <= ext.p - 1) l = make_Q(ext, l.r, l.s, l.ell);
        terms.emplace_back(l, draw(rng, 1, 3));
    }
    return make_object(std::move(terms));
}

struct CaseOutcome {
    bool ok = true;
    FailureInfo info;
};

CaseOutcome pass_case() { return {}; }

CaseOutcome fail_case(std::string inputs, std::string expected, std::string got) {
    CaseOutcome c;
    c.ok = false;
    c.info = {std::move(inputs), std::move(expected), std::move(got)};
    return c;
}

CaseOutcome expect_equal(const std::string& inputs, const FormalObject& want,
                         const FormalObject& got) {
    if (want == got) return pass_case();
    return fail_case(inputs, formal_str(want), formal_str(got));
}

CaseOutcome expect_class_equal(const std::string& inputs, const AClass& want, const AClass& got) {
    if (want == got) return pass_case();
    auto render = [](const AClass& c) {
        std::string out;
        for (const auto& [l, m] : c) {
            if (!out.empty()) out += " + ";
            out += std::to_string(m) + "*" + alabel_str(l);
        }
        return out.empty() ? std::string("0") : out;
    };
    return fail_case(inputs, render(want), render(got));
}

using CaseFn = std::function<CaseOutcome(std::mt19937_64&)>;

SuiteReport run_cases(const SuiteConfig& cfg, int cases, const CaseFn& fn) {
    SuiteReport rep;
    rep.suite = cfg.suite;
    for (int i = 0; i < cases; ++i) {
        auto rng = case_engine(cfg.seed, static_cast<std::uint64_t>(i));
        CaseOutcome out;
        try {
            out = fn(rng);
        } catch (const Error& e) {
            out = fail_case("case " + std::to_string(i), "no exception",
                            std::string(e.kind()) + ": " + e.what());
        }
        if (out.ok) {
            ++rep.passed;
        } else {
            ++rep.failed;
            if (!rep.first_failure) rep.first_failure = out.info;
        }
    }
    return rep;
}

SuiteReport run_fixed_checks(const SuiteConfig& cfg,
                             const std::vector<std::pair<std::string, bool>>& checks) {
    SuiteReport rep;
    rep.suite = cfg.suite;
    for (const auto& [name, ok] : checks) {
        if (ok) {
            ++rep.passed;
        } else {
            ++rep.failed;
            if (!rep.first_failure) rep.first_failure = FailureInfo{name, "pass", "fail"};
        }
    }
    return rep;
}

SuiteReport suite_counts(const SuiteConfig& cfg) {
    const ExtensionData& ext = cfg.algebra.ext;
    std::vector<std::pair<std::string, bool>> checks;
    if (ext.kappa == 0) {
        long long rj = ext.r_J, p = ext.p;
        auto hw = enumerate_simples(ext, Predicate::HighestWeight);
        auto gr = enumerate_simples(ext, Predicate::GradingRestricted);
        auto c1 = enumerate_simples(ext, Predicate::C1);
        auto locals = [&](const std::vector<ALabel>& ls) {
            long long n = 0;
            for (const auto& l : ls)
                if (sector(ext, l) == ASector::Local) ++n;
            return n;
        };
        checks.emplace_back("|HW| = r_J^2 p(p-1)",
                            static_cast<long long>(hw.size()) == rj * rj * p * (p - 1));
        checks.emplace_back("|GR| = r_J(p-1)(r_J p-1)",
                            static_cast<long long>(gr.size()) == rj * (p - 1) * (rj * p - 1));
        checks.emplace_back("|C1| = r_J", static_cast<long long>(c1.size()) == rj);
        if (cfg.algebra.family == Family::Bp) {
            checks.emplace_back("local HW = p(p-1)/2", locals(hw) == p * (p - 1) / 2);
            long long want = p % 2 == 0 ? p * (p - 1) / 2 : (p - 1) * (p - 2) / 2;
            checks.emplace_back("local GR", locals(gr) == want);
        } else if (cfg.algebra.family == Family::B2orb) {
            long long m = rj;
            checks.emplace_back("local HW = m^2", locals(hw) == m * m);
            long long want = m % 2 == 0 ? m * (m - 1) : m * m;
            checks.emplace_back("local GR", locals(gr) == want);
        }
    }
    return run_fixed_checks(cfg, checks);
}

SuiteReport suite_border(const SuiteConfig& cfg) {
    const ExtensionData& ext = cfg.algebra.ext;
    SuiteReport rep;
    rep.suite = cfg.suite;
    if (ext.kappa != 0) return rep;
    QAlpha want = QAlpha::rational(
        ext.p, -Rational(static_cast<long long>(ext.p - 1) * (ext.p - 1), 4 * ext.p));
    auto note = [&](const std::string& inputs, const LowestWeight& lw) {
        if (lw.bounded && lw.value == want) {
            ++rep.passed;
        } else {
            ++rep.failed;
            if (!rep.first_failure)
                rep.first_failure = FailureInfo{inputs, qalpha_str(want),
                                                lw.bounded ? qalpha_str(lw.value) : "unbounded"};
        }
    };
    for (int r = 1; r <= ext.r_J; ++r)
        for (int s = 1; s <= ext.p; ++s)
            for (int sign : {1, -1}) {
                HalfInt border = HalfInt::from_doubled(sign * ext.r_J * (ext.p - s));
                ALabel l = make_W(ext, r, s, border);
                note(alabel_str(l), lowest_weight(ext, l));
            }
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = case_engine(cfg.seed, static_cast<std::uint64_t>(i));
        LabelConstraints c;
        c.eps_free = true;
        c.kind = ALabel::Kind::E;
        ALabel l = random_label(rng, ext, c);
        l.ell = HalfInt();
        l = canonicalize(ext, l);
        note(alabel_str(l), lowest_weight(ext, l));
    }
    return rep;
}

SuiteReport suite_c1_subring(const SuiteConfig& cfg) {
    const ExtensionData& ext = cfg.algebra.ext;
    std::vector<std::pair<std::string, bool>> checks;
    if (ext.kappa == 0) {
        auto c1 = enumerate_simples(ext, Predicate::C1);
        for (const auto& x : c1)
            for (const auto& y : c1) {
                int want_r = ((x.r + y.r - 2) % ext.r_J) + 1;
                FormalObject want = single(make_W(ext, want_r, 1, HalfInt()));
                FormalObject got = fuse(ext, single(x), single(y));
                checks.emplace_back(alabel_str(x) + " x " + alabel_str(y), got == want);
            }
    }
    return run_fixed_checks(cfg, checks);
}

SuiteReport suite_literature(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, bool>> checks;
    for (const auto& c : reproduce_literature(cfg.algebra))
        checks.emplace_back(c.name, c.passed);
    return run_fixed_checks(cfg, checks);
}

SuiteReport suite_monoidal_induction(const SuiteConfig& cfg) {
    const ExtensionData& ext = cfg.algebra.ext;
    return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
        auto draw_input = [&](HalfInt ell) -> std::pair<WeightValue, SingletLabel> {
            if (draw(rng, 0, 2) == 0) {
                for (int attempt = 0; attempt < 200; ++attempt) {
                    WeightValue w(ext.p, 0, small_rational(rng), small_rational(rng));
                    if (decompose_alpha(w).atypical) continue;
                    QAlpha g = Rational(ext.r_J, 2)
                                   * (alpha_plus_times(w) - QAlpha::rational(ext.p, ext.p - 1))
                               + QAlpha::rational(ext.p, ell.to_rational());
                    return {WeightValue(ext.p, 0, g.u(), g.v()), make_fock(ext.p, w)};
                }
                throw Error("OutOfRange", "no typical weight found");
            }
            int r = static_cast<int>(draw(rng, -1, std::max(ext.r_J, 3)));
            int s = static_cast<int>(draw(rng, 1, ext.p));
            Rational g = Rational(static_cast<long long>(ext.r_J) * (1 - r) * ext.p, 2)
                       + ell.to_rational();
            return {WeightValue(ext.p, 0, g, 0), make_atypical(ext.p, r, s)};
        };
        HalfInt l1 = HalfInt::from_doubled(draw(rng, -4, 4));
        HalfInt l2 = HalfInt::from_doubled(draw(rng, -4, 4));
        auto [g1, m1] = draw_input(l1);
        auto [g2, m2] = draw_input(l2);
        FormalObject rhs = fuse(ext, single(induce(ext, g1, m1)), single(induce(ext, g2, m2)));
        std::vector<std::pair<ALabel, long long>> lhs_terms;
        WeightValue g12 = g1 + g2;
        for (const auto& [t, m] : singlet_fuse(ext.p, m1, m2).terms)
            lhs_terms.emplace_back(induce(ext, g12, t), m);
        FormalObject lhs = make_object(std::move(lhs_terms));
        std::string inputs = singlet_label_str(m1) + " @ " + l1.str() + ", " +
                             singlet_label_str(m2) + " @ " + l2.str();
        return expect_equal(inputs, lhs, rhs);
    });
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    const ExtensionData& ext = cfg.algebra.ext;
    switch (cfg.suite) {
    case Suite::Commutativity:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            FormalObject ox = maybe_projective(rng, ext, x);
            FormalObject oy = maybe_projective(rng, ext, y);
            return expect_equal(formal_str(ox) + " x " + formal_str(oy),
                                fuse(ext, ox, oy), fuse(ext, oy, ox));
        });
    case Suite::AssociativityClass:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            ALabel z = random_label(rng, ext, {});
            FormalObject left = fuse(ext, fuse(ext, single(x), single(y)), single(z));
            FormalObject right = fuse(ext, single(x), fuse(ext, single(y), single(z)));
            std::string inputs = alabel_str(x) + ", " + alabel_str(y) + ", " + alabel_str(z);
            return expect_class_equal(inputs, a_class(ext, left), a_class(ext, right));
        });
    case Suite::AssociativityObject:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            ALabel z = random_label(rng, ext, {});
            FormalObject left = fuse(ext, fuse(ext, single(x), single(y)), single(z));
            FormalObject right = fuse(ext, single(x), fuse(ext, single(y), single(z)));
            std::string inputs = alabel_str(x) + ", " + alabel_str(y) + ", " + alabel_str(z);
            return expect_equal(inputs, left, right);
        });
    case Suite::Unit:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            ALabel x = random_label(rng, ext, {});
            FormalObject ox = maybe_projective(rng, ext, x);
            FormalObject unit = single(make_W(ext, 1, 1, HalfInt()));
            return expect_equal("1 x " + formal_str(ox), ox, fuse(ext, unit, ox));
        });
    case Suite::DualInvolution:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            ALabel x = random_label(rng, ext, {});
            FormalObject ox = maybe_projective(rng, ext, x);
            return expect_equal(formal_str(ox), ox, a_dual(ext, a_dual(ext, ox)));
        });
    case Suite::DualHom:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            AClass want = a_class(ext, a_dual(ext, fuse(ext, single(x), single(y))));
            AClass got = a_class(ext, fuse(ext, single(a_dual(ext, x)), single(a_dual(ext, y))));
            return expect_class_equal(alabel_str(x) + ", " + alabel_str(y), want, got);
        });
    case Suite::SpectralFlow:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            HalfInt a = HalfInt::from_doubled(draw(rng, -3, 3));
            HalfInt b = HalfInt::from_doubled(draw(rng, -3, 3));
            FormalObject want = shift_ell(ext, fuse(ext, single(x), single(y)), a + b);
            FormalObject got = fuse(ext, single(shift_ell(ext, x, a)), single(shift_ell(ext, y, b)));
            std::string inputs = alabel_str(x) + "<" + a.str() + ">, " + alabel_str(y) + "<" +
                                 b.str() + ">";
            return expect_equal(inputs, want, got);
        });
    case Suite::SectorAdditivity:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            auto [x, y] = random_pair(rng, ext);
            ASector want = sector(ext, x) == sector(ext, y) ? ASector::Local : ASector::Twisted;
            for (const auto& [l, m] : fuse(ext, single(x), single(y)).terms)
                if (sector(ext, l) != want)
                    return fail_case(alabel_str(x) + ", " + alabel_str(y),
                                     want == ASector::Local ? "local" : "twisted",
                                     alabel_str(l) + " in the other sector");
            return pass_case();
        });
    case Suite::MonoidalInduction:
        return suite_monoidal_induction(cfg);
    case Suite::PeelRoundtrip:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            FormalObject proj = random_projective_sum(rng, ext);
            return expect_equal(formal_str(proj), proj, a_peel(ext, a_class(ext, proj)));
        });
    case Suite::Counts:
        return suite_counts(cfg);
    case Suite::BorderWeight:
        return suite_border(cfg);
    case Suite::MonodromySector:
        return run_cases(cfg, cfg.samples, [&](std::mt19937_64& rng) {
            LabelConstraints c;
            c.eps_free = true;
            ALabel x = random_label(rng, ext, c);
            Rational e = monodromy_exponent(ext, x);
            Rational want = sector(ext, x) == ASector::Local ? Rational(0) : Rational(1, 2);
            if (e == want) return pass_case();
            return fail_case(alabel_str(x), rat_str(want), rat_str(e));
        });
    case Suite::C1Subring:
        return suite_c1_subring(cfg);
    case Suite::LiteratureAll:
        return suite_literature(cfg);
    }
    throw Error("OutOfRange", "unknown suite");
}

} // namespace wfusion
