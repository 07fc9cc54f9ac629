#include "wfusion/grading.hpp"

#include <cstdlib>

namespace wfusion {

namespace {

// gamma*lambda_J of the underlying Heisenberg factor, as a scalar
QAlpha heisenberg_g(const ExtensionData& ext, const ALabel& l) {
    if (l.kind == ALabel::Kind::E) {
        if (l.w.has_eps()) throw Error("GenericWeight", "weight value demanded of a generic label");
        return Rational(ext.r_J, 2) * (alpha_plus_times(l.w) - QAlpha::rational(ext.p, ext.p - 1))
             + QAlpha::rational(ext.p, l.ell.to_rational());
    }
    return QAlpha::rational(ext.p, Rational(static_cast<long long>(ext.r_J) * (1 - l.r) * ext.p, 2)
                                       + l.ell.to_rational());
}

QAlpha singlet_part_weight(const ExtensionData& ext, const ALabel& l, long long n) {
    if (l.kind == ALabel::Kind::E) {
        // F_{lambda - n r_J a+/2} = F_{lambda + n r_J p/2 * am}
        WeightValue shifted = l.w.with_v_shift(Rational(n) * Rational(ext.r_J) * Rational(ext.p, 2));
        QAlpha x = shifted.body();
        return Rational(1, 2) * (x * (x - QAlpha::alpha_zero(ext.p)));
    }
    return QAlpha::rational(ext.p, h_atypical(ext.p, l.r + static_cast<int>(n) * ext.r_J, l.s));
}

} // namespace

QAlpha summand_weight(const ExtensionData& ext, const ALabel& l, long long n) {
    if (!l.is_simple()) throw Error("BadLabel", "summand_weight takes simple labels");
    if (n > 1000000 || n < -1000000)
        throw Error("OutOfRange", "summand index out of range");
    QAlpha g = heisenberg_g(ext, l);
    QAlpha shifted = g + QAlpha::rational(ext.p, Rational(n) * ext.lambdaJ_sq);
    QAlpha heis = (shifted * shifted) / QAlpha::rational(ext.p, 2 * ext.lambdaJ_sq);
    return heis + singlet_part_weight(ext, l, n);
}

LowestWeight lowest_weight(const ExtensionData& ext, const ALabel& simple) {
    ALabel l = canonicalize(ext, simple);
    if (!l.is_simple()) throw Error("BadLabel", "lowest_weight takes simple labels");
    LowestWeight res;
    if (ext.kappa == 0) {
        // boundedness per the printed criteria; minima sit at n = 0 / n = -1
        if (l.kind == ALabel::Kind::E) {
            if (l.ell != HalfInt()) return res;
            res.bounded = true;
            res.value = summand_weight(ext, l, 0);
            return res;
        }
        std::int64_t border = static_cast<std::int64_t>(ext.r_J) * (ext.p - l.s);
        if (std::abs(l.ell.doubled()) > border) return res;
        res.bounded = true;
        QAlpha w0 = summand_weight(ext, l, 0);
        QAlpha w1 = summand_weight(ext, l, -1);
        res.value = w1 < w0 ? w1 : w0;
        return res;
    }
    // kappa > 0: each side of n = 0 is a convex quadratic, so walk each
    // branch until the values stop decreasing
    QAlpha best = summand_weight(ext, l, 0);
    for (int dir : {+1, -1}) {
        QAlpha prev = summand_weight(ext, l, dir);
        long long n = dir;
        while (true) {
            if (prev < best) best = prev;
            QAlpha next = summand_weight(ext, l, n + dir);
            if (!(next < prev)) break;
            prev = next;
            n += dir;
        }
    }
    res.bounded = true;
    res.value = best;
    return res;
}

GradingReport classify(const ExtensionData& ext, const ALabel& simple) {
    ALabel l = canonicalize(ext, simple);
    if (!l.is_simple()) throw Error("BadLabel", "classify takes simple labels");
    GradingReport rep;
    bool generic = l.kind == ALabel::Kind::E && l.w.has_eps();
    if (ext.kappa > 0) {
        rep.lower_bounded = true;
        rep.grading_restricted = true;
        rep.highest_weight = true; // grading-restricted simples are highest weight
        rep.c1_cofinite = true;
    } else if (l.kind == ALabel::Kind::E) {
        rep.lower_bounded = l.ell == HalfInt();
    } else {
        std::int64_t border = static_cast<std::int64_t>(ext.r_J) * (ext.p - l.s);
        std::int64_t d = l.ell.doubled();
        rep.lower_bounded = std::abs(d) <= border;
        if (l.s <= ext.p - 1) {
            rep.highest_weight = -border < d && d <= border;
            rep.grading_restricted = std::abs(d) < border;
        }
        rep.c1_cofinite = l.s == 1 && d == 0;
    }
    if (!rep.lower_bounded) {
        rep.lowest_kind = GradingReport::Lowest::Unbounded;
    } else if (generic) {
        rep.lowest_kind = GradingReport::Lowest::Generic;
    } else {
        rep.lowest_kind = GradingReport::Lowest::Value;
        rep.lowest_weight = lowest_weight(ext, l).value;
    }
    return rep;
}

std::vector<ALabel> enumerate_simples(const ExtensionData& ext, Predicate pred) {
    if (ext.kappa > 0)
        throw Error("Infinite", "kappa > 0: the family is not a finite list");
    std::vector<std::pair<ALabel, long long>> out;
    if (pred == Predicate::C1) {
        for (int r = 1; r <= ext.r_J; ++r)
            out.emplace_back(make_W(ext, r, 1, HalfInt()), 1);
    } else {
        for (int r = 1; r <= ext.r_J; ++r) {
            for (int s = 1; s <= ext.p - 1; ++s) {
                // doubled ell in (-border, border] for HW, (-border, border) for GR
                std::int64_t border = static_cast<std::int64_t>(ext.r_J) * (ext.p - s);
                std::int64_t hi = pred == Predicate::HighestWeight ? border : border - 1;
                for (std::int64_t d = -border + 1; d <= hi; ++d)
                    out.emplace_back(make_W(ext, r, s, HalfInt::from_doubled(d)), 1);
            }
        }
    }
    auto obj = make_object(std::move(out));
    std::vector<ALabel> labels;
    labels.reserve(obj.terms.size());
    for (auto& [l, m] : obj.terms) labels.push_back(l);
    return labels;
}

Rational monodromy_exponent(const ExtensionData& ext, const ALabel& simple) {
    ALabel l = canonicalize(ext, simple);
    if (!l.is_simple()) throw Error("BadLabel", "monodromy_exponent takes simple labels");
    QAlpha g = heisenberg_g(ext, l); // throws GenericWeight for eps labels
    QAlpha lam_sq = QAlpha::rational(ext.p, ext.lambdaJ_sq);
    QAlpha two_lam_sq = QAlpha::rational(ext.p, 2 * ext.lambdaJ_sq);
    QAlpha h_w = (g * g) / two_lam_sq + singlet_part_weight(ext, l, 0);

    // fuse the underlying H (x) M(p) data with J = F_{lambda_J} (x) M[r_J+1,1]
    SingletLabel m = l.kind == ALabel::Kind::E
                         ? make_fock(ext.p, l.w)
                         : make_atypical(ext.p, l.r, l.s);
    SingletObject prod = singlet_fuse(ext.p, make_atypical(ext.p, ext.r_J + 1, 1), m);
    if (prod.terms.size() != 1 || prod.terms[0].second != 1 || !prod.terms[0].first.is_simple())
        throw Error("NonRationalExponent", "simple current fusion was not simple");
    QAlpha g_jw = g + lam_sq;
    QAlpha h_jw = (g_jw * g_jw) / two_lam_sq + singlet_h(ext.p, prod.terms[0].first);

    Rational h_j = Rational(ext.kappa, 2) + Rational(static_cast<long long>(ext.r_J) * (ext.p - 1), 2);
    QAlpha e = h_jw - h_w - QAlpha::rational(ext.p, h_j);
    if (!e.is_rational()) throw Error("NonRationalExponent", "balancing exponent is not rational");
    return rat_mod(e.u(), 1);
}

} // namespace wfusion
