#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wfusion/rational.hpp"

namespace wfusion {

/// Element of (1/2)Z stored as its doubled value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }

    constexpr std::int64_t doubled() const { return d_; }
    constexpr bool is_integer() const { return d_ % 2 == 0; }

    Rational to_rational() const { return Rational(d_, 2); }

    static std::optional<HalfInt> from_rational(const Rational& q) {
        Rational twice = q * 2;
        if (!wfusion::is_integer(twice)) return std::nullopt;
        BigInt n = rat_num(twice);
        if (n > (BigInt(1) << 40) || n < -(BigInt(1) << 40)) return std::nullopt;
        return HalfInt(static_cast<std::int64_t>(n));
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.d_ + b.d_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.d_ - b.d_); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.d_); }
    friend constexpr HalfInt operator*(std::int64_t n, HalfInt a) { return HalfInt(n * a.d_); }
    constexpr HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.d_ == b.d_; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.d_ != b.d_; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.d_ < b.d_; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.d_ <= b.d_; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.d_ > b.d_; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.d_ >= b.d_; }

    /// "k" when integral, "d/2" otherwise; never decimals.
    std::string str() const {
        if (is_integer()) return std::to_string(d_ / 2);
        return std::to_string(d_) + "/2";
    }

private:
    explicit constexpr HalfInt(std::int64_t d) : d_(d) {}
    std::int64_t d_ = 0;
};

/// Parse "k" or "k/2" (sign allowed). Rejects other denominators.
HalfInt parse_halfint(const std::string& text);

} // namespace wfusion
