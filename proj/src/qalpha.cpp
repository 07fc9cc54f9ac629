#include "wfusion/qalpha.hpp"

#include <cctype>
#include <cmath>

namespace wfusion {

namespace {

// decimal digit run -> BigInt; leading zeros are stripped so the cpp_int
// string constructor never sees its octal/hex prefixes
BigInt digits_to_bigint(const std::string& digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(first));
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto fail = [&]() -> Rational { throw ParseError("bad rational: '" + text + "'"); };
    if (n == 0) fail();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
    BigInt num = digits_to_bigint(text.substr(start, i - start));
    if (i == n) return Rational(sign * num);
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != n) fail();
    BigInt den = digits_to_bigint(text.substr(den_start));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rational(sign * num, den);
}

HalfInt parse_halfint(const std::string& text) {
    Rational q = parse_rational(text);
    auto h = HalfInt::from_rational(q);
    if (!h) throw ParseError("not a half-integer: '" + text + "'");
    return *h;
}

int fold_k(int p) {
    if (p < 2 || p % 2 != 0) return 0;
    int half = p / 2;
    int k = static_cast<int>(std::sqrt(static_cast<double>(half)));
    for (int c = k - 1; c <= k + 1; ++c)
        if (c > 0 && c * c == half) return c;
    return 0;
}

QAlpha::QAlpha(int p, Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)), p_(p) {
    if (v_ != 0) {
        if (p_ < 2) throw Error("BadLabel", "QAlpha with am-part needs p >= 2");
        if (int k = fold_k(p_)) {
            u_ -= v_ / k; // am = -1/k
            v_ = 0;
        }
    }
}

int QAlpha::unify(const QAlpha& a, const QAlpha& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw Error("BadLabel", "mixed p in scalar arithmetic");
}

QAlpha operator+(const QAlpha& a, const QAlpha& b) {
    return QAlpha(QAlpha::unify(a, b), a.u_ + b.u_, a.v_ + b.v_);
}

QAlpha operator-(const QAlpha& a, const QAlpha& b) {
    return QAlpha(QAlpha::unify(a, b), a.u_ - b.u_, a.v_ - b.v_);
}

QAlpha operator-(const QAlpha& a) { return QAlpha(a.p_, -a.u_, -a.v_); }

QAlpha operator*(const QAlpha& a, const QAlpha& b) {
    int p = QAlpha::unify(a, b);
    if (p == 0) return QAlpha(0, a.u_ * b.u_, 0);
    Rational two_over_p(2, p); // am^2 -> 2/p
    return QAlpha(p, a.u_ * b.u_ + a.v_ * b.v_ * two_over_p, a.u_ * b.v_ + a.v_ * b.u_);
}

QAlpha operator*(const Rational& c, const QAlpha& a) { return QAlpha(a.p_, c * a.u_, c * a.v_); }

QAlpha operator/(const QAlpha& a, const QAlpha& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "division by zero");
    int p = QAlpha::unify(a, b);
    if (b.v_ == 0) return QAlpha(p, a.u_ / b.u_, a.v_ / b.u_);
    // field case: 2p not a square, so norm u^2 - 2v^2/p never vanishes
    Rational norm = b.u_ * b.u_ - b.v_ * b.v_ * Rational(2, p);
    QAlpha conj(p, b.u_, -b.v_);
    QAlpha num = a * conj;
    return QAlpha(p, num.u_ / norm, num.v_ / norm);
}

bool operator==(const QAlpha& a, const QAlpha& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return false;
    return a.u_ == b.u_ && a.v_ == b.v_;
}

int QAlpha::sign() const {
    // value = u - v*sqrt(2/p); folded values have v = 0
    if (v_ == 0) return sign_of(u_);
    int su = sign_of(u_), sv = sign_of(v_);
    if (su == 0) return -sv;
    if (su > 0 && sv <= 0) return 1;
    if (su < 0 && sv >= 0) return -1;
    // same strict sign: compare u^2 against 2v^2/p
    int cmp = sign_of(u_ * u_ - v_ * v_ * Rational(2, p_));
    if (cmp == 0) return 0; // cannot happen for v != 0 unless 2p is square
    return su > 0 ? cmp : -cmp;
}

WeightValue::WeightValue(int p, Rational eps, Rational u, Rational v)
    : g_(std::move(eps)), u_(std::move(u)), v_(std::move(v)), p_(p) {
    if (p_ < 2) throw Error("BadLabel", "weight needs p >= 2");
    if (int k = fold_k(p_); k && u_ != 0) {
        v_ -= k * u_; // move everything onto the am-axis: u + v*am = (v - k*u)*am
        u_ = 0;
    }
}

WeightValue WeightValue::alpha_rs(int p, int r, int s) {
    // (1-r)/2*a+ + (1-s)/2*am = [(1-s) - p(1-r)]/2 * am
    return WeightValue(p, 0, 0, Rational((1 - s) - p * (1 - r), 2));
}

WeightValue WeightValue::with_v_shift(const Rational& dv) const {
    return WeightValue(p_, g_, u_, v_ + dv);
}

WeightValue operator+(const WeightValue& a, const WeightValue& b) {
    if (a.p_ != b.p_) throw Error("BadLabel", "mixed p in weight arithmetic");
    return WeightValue(a.p_, a.g_ + b.g_, a.u_ + b.u_, a.v_ + b.v_);
}

WeightValue operator-(const WeightValue& a, const WeightValue& b) {
    if (a.p_ != b.p_) throw Error("BadLabel", "mixed p in weight arithmetic");
    return WeightValue(a.p_, a.g_ - b.g_, a.u_ - b.u_, a.v_ - b.v_);
}

WeightValue operator-(const WeightValue& a) { return WeightValue(a.p_, -a.g_, -a.u_, -a.v_); }

bool operator==(const WeightValue& a, const WeightValue& b) {
    return a.p_ == b.p_ && a.g_ == b.g_ && a.u_ == b.u_ && a.v_ == b.v_;
}

bool operator<(const WeightValue& a, const WeightValue& b) {
    if (a.g_ != b.g_) return a.g_ < b.g_;
    if (a.u_ != b.u_) return a.u_ < b.u_;
    return a.v_ < b.v_;
}

QAlpha alpha_plus_times(const WeightValue& w) {
    // a+ * (u + v*am) = -p*am*u - p*v*(2/p) = -2v - p*u*am
    return QAlpha(w.p(), -2 * w.v(), -w.p() * w.u());
}

AlphaDecomposition decompose_alpha(const WeightValue& w) {
    AlphaDecomposition d;
    if (w.has_eps() || w.u() != 0) return d;
    Rational twice_v = 2 * w.v();
    if (!is_integer(twice_v)) return d;
    BigInt t = rat_num(twice_v); // 2v = (1-s) - p(1-r)
    int p = w.p();
    BigInt s_minus_1 = ((-t) % p + p) % p;
    int s = static_cast<int>(s_minus_1) + 1;
    BigInt r_num = t - (1 - s); // = -p(1-r), divisible by p
    d.atypical = true;
    d.r = 1 + static_cast<int>(r_num / p);
    d.s = s;
    return d;
}

} // namespace wfusion
