#include "wfusion/singlet.hpp"

#include <algorithm>
#include <tuple>

namespace wfusion {

namespace {

int label_p(const SingletLabel& l) { return l.kind == SingletLabel::Kind::F ? l.w.p() : 0; }

void check_p(int p, const SingletLabel& l) {
    if (int lp = label_p(l); lp != 0 && lp != p)
        throw Error("BadLabel", "label built for different p");
}

std::tuple<int, int, int, const WeightValue*> sort_key(const SingletLabel& l) {
    // (s-slot, kind, r); F sorts after M/P via a large s-slot
    int kind = static_cast<int>(l.kind);
    if (l.kind == SingletLabel::Kind::F) return {1 << 20, kind, 0, &l.w};
    return {l.s, kind, l.r, nullptr};
}

} // namespace

bool operator==(const SingletLabel& a, const SingletLabel& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == SingletLabel::Kind::F) return a.w == b.w;
    return a.r == b.r && a.s == b.s;
}

bool operator<(const SingletLabel& a, const SingletLabel& b) {
    auto [sa, ka, ra, wa] = sort_key(a);
    auto [sb, kb, rb, wb] = sort_key(b);
    if (sa != sb) return sa < sb;
    if (ka != kb) return ka < kb;
    if (ra != rb) return ra < rb;
    if (wa && wb) return *wa < *wb;
    return false;
}

SingletLabel make_atypical(int p, int r, int s) {
    if (p < 2 || s < 1 || s > p) throw Error("BadLabel", "M[r,s] needs 1 <= s <= p");
    SingletLabel l;
    l.kind = SingletLabel::Kind::M;
    l.r = r;
    l.s = s;
    return l;
}

SingletLabel make_fock(int p, const WeightValue& w) {
    if (w.p() != p) throw Error("BadLabel", "weight built for different p");
    auto d = decompose_alpha(w);
    if (d.atypical) {
        if (d.s == p) return make_atypical(p, d.r, p); // F at alpha_{r,p} is M[r,p]
        throw Error("BadLabel", "F at an atypical point with s < p is not a simple label");
    }
    SingletLabel l;
    l.kind = SingletLabel::Kind::F;
    l.w = w;
    return l;
}

SingletLabel make_proj_cover(int p, int r, int s) {
    if (p < 2 || s < 1 || s > p - 1) throw Error("BadLabel", "P[r,s] needs 1 <= s <= p-1");
    SingletLabel l;
    l.kind = SingletLabel::Kind::P;
    l.r = r;
    l.s = s;
    return l;
}

bool operator==(const SingletObject& a, const SingletObject& b) { return a.terms == b.terms; }

SingletObject make_singlet_object(std::vector<std::pair<SingletLabel, long long>> terms) {
    std::map<SingletLabel, long long> acc;
    for (auto& [l, m] : terms) {
        if (m <= 0) throw Error("BadLabel", "multiplicities must be positive");
        acc[l] += m;
    }
    SingletObject obj;
    obj.terms.assign(acc.begin(), acc.end());
    return obj;
}

Rational h_atypical(int p, int r, int s) {
    if (r < 1) r = 2 - r;
    return Rational(static_cast<long long>(r) * r - 1) * Rational(p, 4)
         - Rational(static_cast<long long>(r) * s - 1, 2)
         + Rational(static_cast<long long>(s) * s - 1, 4 * static_cast<long long>(p));
}

QAlpha singlet_h(int p, const SingletLabel& l) {
    check_p(p, l);
    switch (l.kind) {
    case SingletLabel::Kind::M:
        return QAlpha::rational(p, h_atypical(p, l.r, l.s));
    case SingletLabel::Kind::F: {
        if (l.w.has_eps()) throw Error("GenericWeight", "conformal weight of a generic Fock label");
        QAlpha x = l.w.body();
        return Rational(1, 2) * (x * (x - QAlpha::alpha_zero(p)));
    }
    case SingletLabel::Kind::P:
        throw Error("BadLabel", "singlet_h takes simple labels");
    }
    throw Error("BadLabel", "unreachable");
}

namespace {

// P[r,p] appearing in fusion sums means the simple projective M[r,p]
SingletLabel proj_or_simple(int p, int r, int s) {
    return s == p ? make_atypical(p, r, p) : make_proj_cover(p, r, s);
}

SingletObject fuse_atyp_atyp(int p, const SingletLabel& x, const SingletLabel& y) {
    std::vector<std::pair<SingletLabel, long long>> out;
    int r = x.r + y.r - 1;
    int top1 = std::min(x.s + y.s - 1, 2 * p - 1 - x.s - y.s);
    for (int k = std::abs(x.s - y.s) + 1; k <= top1; k += 2)
        out.emplace_back(make_atypical(p, r, k), 1);
    for (int k = 2 * p + 1 - x.s - y.s; k <= p; k += 2)
        out.emplace_back(proj_or_simple(p, r, k), 1);
    return make_singlet_object(std::move(out));
}

SingletObject fuse_atyp_typ(int p, const SingletLabel& m, const SingletLabel& f) {
    std::vector<std::pair<SingletLabel, long long>> out;
    WeightValue base = f.w + WeightValue::alpha_rs(p, m.r, m.s);
    for (int k = 0; k < m.s; ++k)
        out.emplace_back(make_fock(p, base.with_v_shift(k)), 1);
    return make_singlet_object(std::move(out));
}

SingletObject fuse_typ_typ(int p, const SingletLabel& x, const SingletLabel& y) {
    WeightValue sum = x.w + y.w;
    auto d = decompose_alpha(sum - WeightValue::alpha_zero_w(p));
    std::vector<std::pair<SingletLabel, long long>> out;
    if (d.atypical) {
        for (int t = d.s; t <= p; t += 2) out.emplace_back(proj_or_simple(p, d.r, t), 1);
        for (int t = p + 2 - d.s; t <= p; t += 2) out.emplace_back(proj_or_simple(p, d.r - 1, t), 1);
    } else {
        for (int k = 0; k < p; ++k) out.emplace_back(make_fock(p, sum.with_v_shift(k)), 1);
    }
    return make_singlet_object(std::move(out));
}

} // namespace

SingletObject singlet_fuse(int p, const SingletLabel& x, const SingletLabel& y) {
    check_p(p, x);
    check_p(p, y);
    if (!x.is_simple() || !y.is_simple())
        throw Error("BadLabel", "singlet fusion takes simple labels");
    bool xa = x.kind == SingletLabel::Kind::M;
    bool ya = y.kind == SingletLabel::Kind::M;
    if (xa && ya) return fuse_atyp_atyp(p, x, y);
    if (xa) return fuse_atyp_typ(p, x, y);
    if (ya) return fuse_atyp_typ(p, y, x);
    return fuse_typ_typ(p, x, y);
}

SingletLabel singlet_dual(int p, const SingletLabel& l) {
    check_p(p, l);
    switch (l.kind) {
    case SingletLabel::Kind::M:
        return make_atypical(p, 2 - l.r, l.s);
    case SingletLabel::Kind::F:
        return make_fock(p, WeightValue::alpha_zero_w(p) - l.w);
    case SingletLabel::Kind::P:
        return make_proj_cover(p, 2 - l.r, l.s);
    }
    throw Error("BadLabel", "unreachable");
}

SingletClass singlet_class(int p, const SingletLabel& l) {
    check_p(p, l);
    SingletClass c;
    if (l.kind == SingletLabel::Kind::P) {
        c[make_atypical(p, l.r, l.s)] += 2;
        c[make_atypical(p, l.r - 1, p - l.s)] += 1;
        c[make_atypical(p, l.r + 1, p - l.s)] += 1;
    } else {
        c[l] += 1;
    }
    return c;
}

SingletClass singlet_class(int p, const SingletObject& obj) {
    SingletClass c;
    for (const auto& [l, m] : obj.terms)
        for (const auto& [f, fm] : singlet_class(p, l)) c[f] += m * fm;
    return c;
}

SingletObject singlet_peel(int p, const SingletClass& cls) {
    SingletClass rest;
    std::vector<std::pair<SingletLabel, long long>> out;
    for (const auto& [l, m] : cls) {
        if (m < 0) throw Error("NotProjectiveClass", "negative multiplicity");
        if (m == 0) continue;
        if (!l.is_simple()) throw Error("BadLabel", "class vectors are over simple labels");
        if (l.kind == SingletLabel::Kind::F || l.s == p)
            out.emplace_back(l, m); // own projective cover
        else
            rest[l] = m;
    }
    // remaining entries all have s <= p-1; the unique minimal-r composition
    // factor of P[r,s] is M[r-1,p-s], so the globally minimal r is forced
    while (!rest.empty()) {
        auto it = std::min_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
            return std::tie(a.first.r, a.first.s) < std::tie(b.first.r, b.first.s);
        });
        const SingletLabel entry = it->first;
        const long long mult = it->second;
        SingletLabel cover = make_proj_cover(p, entry.r + 1, p - entry.s);
        for (const auto& [f, fm] : singlet_class(p, cover)) {
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
    return make_singlet_object(std::move(out));
}

} // namespace wfusion
