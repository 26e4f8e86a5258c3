#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "spoq/rational.hpp"

namespace spoq {

/// Half-integer (element of (1/2)Z), stored as twice its value.
/// Symbol degrees, operator orders and Casimir indices all live here.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }
    static constexpr HalfInt halves(int t) { return HalfInt{t}; }

    bool is_integer() const { return twice % 2 == 0; }
    bool is_half_odd() const { return twice % 2 != 0; }

    int as_int() const {
        if (!is_integer()) throw std::domain_error("half-integer is not integral: " + str());
        return twice / 2;
    }
    /// Integer part (floor), e.g. floor(3/2) = 1.
    int floor() const { return twice >= 0 ? twice / 2 : (twice - 1) / 2; }

    Rational to_rational() const { return Rational(twice, 2); }
    std::string str() const {
        return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        twice -= o.twice;
        return *this;
    }
};

inline constexpr HalfInt kHalf = HalfInt{1};
inline constexpr HalfInt kZeroDeg = HalfInt{0};

}  // namespace spoq
