#pragma once

#include <string>

#include "wfusion/halfint.hpp"
#include "wfusion/rational.hpp"

namespace wfusion {

/// Returns k > 0 with p = 2k^2 when 2p is a perfect square, else 0.
/// In the folded case the generator am = -sqrt(2/p) equals the rational -1/k.
int fold_k(int p);

/// Scalar in Q[am]/(am^2 - 2/p), where am = -sqrt(2/p).
///
/// When p = 2k^2 the ring is not a field and am = -1/k numerically; values
/// are stored folded (v == 0) so equality and ordering are numeric.
class QAlpha {
public:
    QAlpha() = default; // zero with unset p, compatible with any p
    QAlpha(int p, Rational u, Rational v);
    static QAlpha rational(int p, Rational u) { return QAlpha(p, std::move(u), 0); }
    static QAlpha alpha_minus(int p) { return QAlpha(p, 0, 1); }
    static QAlpha alpha_plus(int p) { return QAlpha(p, 0, -p); }            // a+ = -p*am
    static QAlpha alpha_zero(int p) { return QAlpha(p, 0, Rational(1 - p)); } // a0 = (1-p)*am

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    int p() const { return p_; }

    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool is_rational() const { return v_ == 0; }

    /// Exact sign of the real number u - v*sqrt(2/p).
    int sign() const;

    friend QAlpha operator+(const QAlpha& a, const QAlpha& b);
    friend QAlpha operator-(const QAlpha& a, const QAlpha& b);
    friend QAlpha operator-(const QAlpha& a);
    friend QAlpha operator*(const QAlpha& a, const QAlpha& b);
    friend QAlpha operator/(const QAlpha& a, const QAlpha& b); // throws DivisionByZero
    friend QAlpha operator*(const Rational& c, const QAlpha& a);

    friend bool operator==(const QAlpha& a, const QAlpha& b);
    friend bool operator!=(const QAlpha& a, const QAlpha& b) { return !(a == b); }
    friend bool operator<(const QAlpha& a, const QAlpha& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QAlpha& a, const QAlpha& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QAlpha& a, const QAlpha& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QAlpha& a, const QAlpha& b) { return (a - b).sign() >= 0; }

private:
    static int unify(const QAlpha& a, const QAlpha& b);
    Rational u_, v_;
    int p_ = 0;
};

struct AlphaDecomposition {
    bool atypical = false;
    int r = 0, s = 0; // valid when atypical; 1 <= s <= p
};

/// Value g*eps + u + v*am with eps a formal generic symbol, transcendental
/// over Q(am). The (u, v) pair is kept in lattice coordinates: for p = 2k^2
/// it is normalized to u = 0 so that atypicality detection and the
/// canonical-shift bookkeeping stay well defined after folding.
class WeightValue {
public:
    WeightValue() = default;
    WeightValue(int p, Rational eps, Rational u, Rational v);
    static WeightValue zero(int p) { return WeightValue(p, 0, 0, 0); }
    static WeightValue generic(int p) { return WeightValue(p, 1, 0, 0); }
    /// The lattice point alpha_{r,s} = (1-r)/2*a+ + (1-s)/2*am.
    static WeightValue alpha_rs(int p, int r, int s);
    static WeightValue alpha_zero_w(int p) { return WeightValue(p, 0, 0, Rational(1 - p)); }

    const Rational& eps() const { return g_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    int p() const { return p_; }
    bool has_eps() const { return g_ != 0; }

    /// Folded scalar part (drops eps).
    QAlpha body() const { return QAlpha(p_, u_, v_); }

    WeightValue with_v_shift(const Rational& dv) const; // adds dv*am
    friend WeightValue operator+(const WeightValue& a, const WeightValue& b);
    friend WeightValue operator-(const WeightValue& a, const WeightValue& b);
    friend WeightValue operator-(const WeightValue& a);

    friend bool operator==(const WeightValue& a, const WeightValue& b);
    friend bool operator!=(const WeightValue& a, const WeightValue& b) { return !(a == b); }
    /// Deterministic lexicographic order on (eps, u, v); not numeric.
    friend bool operator<(const WeightValue& a, const WeightValue& b);

private:
    Rational g_, u_, v_;
    int p_ = 0;
};

/// a+ * (scalar part of w), a rational plus am-multiple: -2v - p*u*am.
QAlpha alpha_plus_times(const WeightValue& w);

/// Recovers alpha_{r,s} coordinates when w lies on the dual lattice
/// (eps-free, u = 0 in lattice coordinates, 2v integral); Typical otherwise.
AlphaDecomposition decompose_alpha(const WeightValue& w);

} // namespace wfusion
