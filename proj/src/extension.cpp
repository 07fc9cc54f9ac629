#include "wfusion/extension.hpp"

#include <algorithm>
#include <tuple>

namespace wfusion {

ExtensionData ExtensionData::make(int p, int r_J, int kappa) {
    if (p < 2) throw Error("OutOfRange", "p must be >= 2");
    if (r_J < 0) throw Error("OutOfRange", "r_J must be >= 0");
    if (kappa < 0) throw Error("OutOfRange", "kappa must be >= 0");
    ExtensionData e;
    e.p = p;
    e.r_J = r_J;
    e.kappa = kappa;
    e.lambdaJ_sq = Rational(kappa) - Rational(p) * Rational(r_J) * Rational(r_J) / 2;
    if (e.lambdaJ_sq == 0) throw Error("OutOfRange", "lambda_J^2 = 0: not a simple current extension");
    if (r_J == 0 && kappa < 1) throw Error("OutOfRange", "r_J = 0 requires kappa >= 1");
    e.half_integer_graded = ((kappa + r_J * (p - 1)) % 2) != 0;
    return e;
}

bool operator==(const ExtensionData& a, const ExtensionData& b) {
    return a.p == b.p && a.r_J == b.r_J && a.kappa == b.kappa;
}

namespace {

std::tuple<int, int, int, std::int64_t> sort_key(const ALabel& l) {
    // E labels sort after W/Q of any s
    if (l.kind == ALabel::Kind::E) return {1 << 20, 2, 0, l.ell.doubled()};
    return {l.s, l.kind == ALabel::Kind::W ? 0 : 1, l.r, l.ell.doubled()};
}

HalfInt half_of(int numerator_int) { return HalfInt::from_doubled(numerator_int); }

} // namespace

bool is_projective(int p, const ALabel& l) {
    return l.kind != ALabel::Kind::W || l.s == p;
}

bool operator==(const ALabel& a, const ALabel& b) {
    if (a.kind != b.kind || a.ell != b.ell) return false;
    if (a.kind == ALabel::Kind::E) return a.w == b.w;
    return a.r == b.r && a.s == b.s;
}

bool operator!=(const ALabel& a, const ALabel& b) { return !(a == b); }

bool operator<(const ALabel& a, const ALabel& b) {
    auto ka = sort_key(a), kb = sort_key(b);
    if (ka != kb) return ka < kb;
    if (a.kind == ALabel::Kind::E && b.kind == ALabel::Kind::E) return a.w < b.w;
    return false;
}

ALabel make_W(const ExtensionData& ext, int r, int s, HalfInt ell) {
    if (s < 1 || s > ext.p) throw Error("BadLabel", "W[r,s,l] needs 1 <= s <= p");
    ALabel l;
    l.kind = ALabel::Kind::W;
    l.r = r;
    l.s = s;
    l.ell = ell;
    return canonicalize(ext, l);
}

ALabel make_E(const ExtensionData& ext, const WeightValue& w, HalfInt ell) {
    if (w.p() != ext.p) throw Error("BadLabel", "weight built for different p");
    auto d = decompose_alpha(w);
    if (d.atypical) {
        if (d.s == ext.p) return make_W(ext, d.r, ext.p, ell);
        throw Error("BadLabel", "E weight must be typical");
    }
    ALabel l;
    l.kind = ALabel::Kind::E;
    l.w = w;
    l.ell = ell;
    return canonicalize(ext, l);
}

ALabel make_Q(const ExtensionData& ext, int r, int s, HalfInt ell) {
    if (s == ext.p) return make_W(ext, r, ext.p, ell); // Q[r,p] is the simple projective
    if (s < 1 || s > ext.p - 1) throw Error("BadLabel", "Q[r,s,l] needs 1 <= s <= p");
    ALabel l;
    l.kind = ALabel::Kind::Q;
    l.r = r;
    l.s = s;
    l.ell = ell;
    return canonicalize(ext, l);
}

bool operator==(const FormalObject& a, const FormalObject& b) { return a.terms == b.terms; }
bool operator!=(const FormalObject& a, const FormalObject& b) { return !(a == b); }

FormalObject make_object(std::vector<std::pair<ALabel, long long>> terms) {
    std::map<ALabel, long long> acc;
    for (auto& [l, m] : terms) {
        if (m <= 0) throw Error("BadLabel", "multiplicities must be positive");
        acc[l] += m;
    }
    FormalObject obj;
    obj.terms.assign(acc.begin(), acc.end());
    return obj;
}

FormalObject single(const ALabel& l) {
    FormalObject obj;
    obj.terms.emplace_back(l, 1);
    return obj;
}

ALabel canonicalize(const ExtensionData& ext, ALabel l) {
    if (ext.r_J > 0) {
        if (l.kind == ALabel::Kind::E) {
            Rational period = Rational(ext.r_J) * Rational(ext.p) / 2;
            Rational v = l.w.v();
            Rational v_can = rat_mod(v, period);
            Rational steps = (v_can - v) / period; // integer
            auto n = static_cast<std::int64_t>(rat_num(steps));
            l.w = WeightValue(ext.p, l.w.eps(), l.w.u(), v_can);
            l.ell += HalfInt::whole(n * ext.kappa);
        } else {
            int r_can = ((l.r - 1) % ext.r_J + ext.r_J) % ext.r_J + 1;
            std::int64_t n = (static_cast<std::int64_t>(r_can) - l.r) / ext.r_J;
            l.r = r_can;
            l.ell += HalfInt::whole(n * ext.kappa);
        }
    } else {
        // r and weight untouched; ell reduced mod kappa into [0, kappa)
        std::int64_t period = 2 * static_cast<std::int64_t>(ext.kappa);
        std::int64_t d = ((l.ell.doubled() % period) + period) % period;
        l.ell = HalfInt::from_doubled(d);
    }
    return l;
}

ASector sector(const ExtensionData& ext, const ALabel& l) {
    int s_index = l.kind == ALabel::Kind::E ? ext.p : l.s;
    // local iff ell - r_J(s-1)/2 is an integer
    std::int64_t twice = l.ell.doubled() - static_cast<std::int64_t>(ext.r_J) * (s_index - 1);
    return (twice % 2 == 0) ? ASector::Local : ASector::Twisted;
}

ALabel induce(const ExtensionData& ext, const WeightValue& g, const SingletLabel& m) {
    if (g.p() != ext.p) throw Error("BadLabel", "Heisenberg data built for different p");
    // eps contributes nothing to ell: work with the folded bodies only
    QAlpha ell_val;
    switch (m.kind) {
    case SingletLabel::Kind::M:
    case SingletLabel::Kind::P:
        ell_val = g.body() - QAlpha::rational(ext.p, Rational(static_cast<long long>(ext.r_J) * (1 - m.r) * ext.p, 2));
        break;
    case SingletLabel::Kind::F:
        ell_val = g.body() - Rational(ext.r_J, 2) * (alpha_plus_times(m.w) - QAlpha::rational(ext.p, ext.p - 1));
        break;
    }
    if (!ell_val.is_rational())
        throw Error("NotInSector", "induced module is neither local nor twisted");
    auto h = HalfInt::from_rational(ell_val.u());
    if (!h) throw Error("NotInSector", "induced module is neither local nor twisted");
    switch (m.kind) {
    case SingletLabel::Kind::M:
        return make_W(ext, m.r, m.s, *h);
    case SingletLabel::Kind::P:
        return make_Q(ext, m.r, m.s, *h);
    case SingletLabel::Kind::F:
        return make_E(ext, m.w, *h);
    }
    throw Error("BadLabel", "unreachable");
}

namespace {

FormalObject fuse_WW(const ExtensionData& ext, const ALabel& x, const ALabel& y) {
    const int p = ext.p;
    std::vector<std::pair<ALabel, long long>> out;
    int r = x.r + y.r - 1;
    HalfInt ell = x.ell + y.ell;
    int top1 = std::min(x.s + y.s - 1, 2 * p - 1 - x.s - y.s);
    for (int k = std::abs(x.s - y.s) + 1; k <= top1; k += 2)
        out.emplace_back(make_W(ext, r, k, ell), 1);
    for (int k = 2 * p + 1 - x.s - y.s; k <= p; k += 2)
        out.emplace_back(make_Q(ext, r, k, ell), 1);
    return make_object(std::move(out));
}

FormalObject fuse_WE(const ExtensionData& ext, const ALabel& m, const ALabel& e) {
    const int p = ext.p;
    std::vector<std::pair<ALabel, long long>> out;
    WeightValue base = e.w + WeightValue::alpha_rs(p, m.r, m.s);
    for (int k = 0; k < m.s; ++k) {
        HalfInt shift = half_of(ext.r_J * (2 * k - (m.s - 1)));
        out.emplace_back(make_E(ext, base.with_v_shift(k), m.ell + e.ell + shift), 1);
    }
    return make_object(std::move(out));
}

FormalObject fuse_EE(const ExtensionData& ext, const ALabel& x, const ALabel& y) {
    const int p = ext.p;
    WeightValue sum = x.w + y.w;
    HalfInt ell = x.ell + y.ell;
    auto d = decompose_alpha(sum - WeightValue::alpha_zero_w(p));
    std::vector<std::pair<ALabel, long long>> out;
    if (d.atypical) {
        HalfInt up = half_of(ext.r_J * (d.s - 1));
        HalfInt down = half_of(-ext.r_J * (p - d.s + 1));
        for (int t = d.s; t <= p; t += 2)
            out.emplace_back(make_Q(ext, d.r, t, ell + up), 1);
        for (int t = p + 2 - d.s; t <= p; t += 2)
            out.emplace_back(make_Q(ext, d.r - 1, t, ell + down), 1);
    } else {
        for (int k = 0; k < p; ++k) {
            HalfInt shift = half_of(ext.r_J * (2 * k - (p - 1)));
            out.emplace_back(make_E(ext, sum.with_v_shift(k), ell + shift), 1);
        }
    }
    return make_object(std::move(out));
}

} // namespace

FormalObject fuse_simple(const ExtensionData& ext, const ALabel& x, const ALabel& y) {
    if (!x.is_simple() || !y.is_simple())
        throw Error("BadLabel", "fuse_simple takes simple labels");
    bool xw = x.kind == ALabel::Kind::W;
    bool yw = y.kind == ALabel::Kind::W;
    if (xw && yw) return fuse_WW(ext, x, y);
    if (xw) return fuse_WE(ext, x, y);
    if (yw) return fuse_WE(ext, y, x);
    return fuse_EE(ext, x, y);
}

AClass a_class(const ExtensionData& ext, const ALabel& l) {
    AClass c;
    if (l.kind == ALabel::Kind::Q) {
        HalfInt jump = half_of(ext.r_J * ext.p);
        c[make_W(ext, l.r, l.s, l.ell)] += 2;
        c[make_W(ext, l.r - 1, ext.p - l.s, l.ell - jump)] += 1;
        c[make_W(ext, l.r + 1, ext.p - l.s, l.ell + jump)] += 1;
    } else {
        c[canonicalize(ext, l)] += 1;
    }
    return c;
}

AClass a_class(const ExtensionData& ext, const FormalObject& obj) {
    AClass c;
    for (const auto& [l, m] : obj.terms)
        for (const auto& [f, fm] : a_class(ext, l)) c[f] += m * fm;
    return c;
}

FormalObject a_peel(const ExtensionData& ext, const AClass& cls) {
    AClass rest;
    std::vector<std::pair<ALabel, long long>> out;
    for (const auto& [l, m] : cls) {
        if (m < 0) throw Error("NotProjectiveClass", "negative multiplicity");
        if (m == 0) continue;
        if (!l.is_simple()) throw Error("BadLabel", "class vectors are over simple labels");
        if (is_projective(ext.p, l))
            out.emplace_back(l, m);
        else
            rest[l] = m;
    }
    // remaining W entries have s <= p-1; a projective class can only cover
    // its minimal-key entry by the single lowest factor of some Q
    auto key = [&](const ALabel& l) -> std::int64_t {
        return ext.r_J > 0 ? l.ell.doubled() : l.r;
    };
    while (!rest.empty()) {
        auto it = std::min_element(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
            return key(a.first) < key(b.first);
        });
        const ALabel entry = it->first;
        const long long mult = it->second;
        ALabel cover = make_Q(ext, entry.r + 1, ext.p - entry.s,
                              entry.ell + half_of(ext.r_J * ext.p));
        for (const auto& [f, fm] : a_class(ext, cover)) {
            auto jt = rest.find(f);
            long long have = jt == rest.end() ? 0 : jt->second;
            have -= mult * fm;
            if (have < 0) throw Error("NotProjectiveClass", "not the class of a projective object");
            if (have == 0) {
                if (jt != rest.end()) rest.erase(jt);
            } else {
                rest[f] = have;
            }
        }
        out.emplace_back(cover, mult);
    }
    return make_object(std::move(out));
}

FormalObject fuse(const ExtensionData& ext, const FormalObject& x, const FormalObject& y) {
    std::vector<std::pair<ALabel, long long>> out;
    for (const auto& [a, ma] : x.terms) {
        for (const auto& [b, mb] : y.terms) {
            long long m = ma * mb;
            FormalObject piece;
            if (a.is_simple() && b.is_simple()) {
                piece = fuse_simple(ext, a, b);
            } else {
                // projective factor: compute in the Grothendieck ring, then peel
                AClass prod;
                for (const auto& [fa, ca] : a_class(ext, a))
                    for (const auto& [fb, cb] : a_class(ext, b))
                        for (const auto& [f, c] : a_class(ext, fuse_simple(ext, fa, fb)))
                            prod[f] += ca * cb * c;
                piece = a_peel(ext, prod);
            }
            for (const auto& [l, lm] : piece.terms) out.emplace_back(l, m * lm);
        }
    }
    return make_object(std::move(out));
}

ALabel a_dual(const ExtensionData& ext, const ALabel& l) {
    switch (l.kind) {
    case ALabel::Kind::W:
        return make_W(ext, 2 - l.r, l.s, -l.ell);
    case ALabel::Kind::Q:
        return make_Q(ext, 2 - l.r, l.s, -l.ell);
    case ALabel::Kind::E:
        return make_E(ext, WeightValue::alpha_zero_w(ext.p) - l.w, -l.ell);
    }
    throw Error("BadLabel", "unreachable");
}

FormalObject a_dual(const ExtensionData& ext, const FormalObject& obj) {
    std::vector<std::pair<ALabel, long long>> out;
    out.reserve(obj.terms.size());
    for (const auto& [l, m] : obj.terms) out.emplace_back(a_dual(ext, l), m);
    return make_object(std::move(out));
}

std::vector<FormalObject> loewy(const ExtensionData& ext, const ALabel& proj) {
    if (!is_projective(ext.p, proj)) throw Error("BadLabel", "loewy takes a projective label");
    if (proj.kind != ALabel::Kind::Q) return {single(proj)};
    HalfInt jump = half_of(ext.r_J * ext.p);
    ALabel top = make_W(ext, proj.r, proj.s, proj.ell);
    FormalObject middle = make_object({
        {make_W(ext, proj.r - 1, ext.p - proj.s, proj.ell - jump), 1},
        {make_W(ext, proj.r + 1, ext.p - proj.s, proj.ell + jump), 1},
    });
    return {single(top), middle, single(top)};
}

ALabel shift_ell(const ExtensionData& ext, ALabel l, HalfInt a) {
    l.ell += a;
    return canonicalize(ext, l);
}

FormalObject shift_ell(const ExtensionData& ext, const FormalObject& obj, HalfInt a) {
    std::vector<std::pair<ALabel, long long>> out;
    out.reserve(obj.terms.size());
    for (const auto& [l, m] : obj.terms) out.emplace_back(shift_ell(ext, l, a), m);
    return make_object(std::move(out));
}

} // namespace wfusion
