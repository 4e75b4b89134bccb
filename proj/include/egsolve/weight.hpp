/*
 * Copyright 2026 The egsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EGSOLVE_WEIGHT_HPP
#define EGSOLVE_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <egsolve/errors.hpp>

namespace eg {

/// Adds two finite 64-bit values, throwing instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

/// Multiplies two finite 64-bit values, throwing instead of wrapping.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/**
 * An extended integer: a finite signed 64-bit value, +inf, or -inf.
 *
 * Finite arithmetic is checked and throws OverflowError rather than
 * wrapping. Infinities absorb finite values; -inf + +inf has no sensible
 * result and throws ValueError. The order is total: -inf < finite < +inf.
 */
class Weight {
public:
    constexpr Weight() noexcept = default;
    constexpr explicit Weight(std::int64_t v) noexcept : value_(v) {}

    static constexpr Weight infinity() noexcept {
        Weight w;
        w.kind_ = Kind::PlusInf;
        return w;
    }
    static constexpr Weight minus_infinity() noexcept {
        Weight w;
        w.kind_ = Kind::MinusInf;
        return w;
    }

    constexpr bool finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_plus_inf() const noexcept { return kind_ == Kind::PlusInf; }
    constexpr bool is_minus_inf() const noexcept { return kind_ == Kind::MinusInf; }

    std::int64_t value() const {
        if (!finite()) throw ValueError("value() called on an infinite weight");
        return value_;
    }

    constexpr bool negative() const noexcept {
        return kind_ == Kind::MinusInf || (kind_ == Kind::Finite && value_ < 0);
    }
    constexpr bool non_negative() const noexcept { return !negative(); }
    constexpr bool positive() const noexcept {
        return kind_ == Kind::PlusInf || (kind_ == Kind::Finite && value_ > 0);
    }
    constexpr bool is_zero() const noexcept { return kind_ == Kind::Finite && value_ == 0; }

    Weight operator+(Weight o) const {
        if (is_plus_inf() || o.is_plus_inf()) {
            if (is_minus_inf() || o.is_minus_inf())
                throw ValueError("indeterminate sum -inf + inf");
            return infinity();
        }
        if (is_minus_inf() || o.is_minus_inf()) return minus_infinity();
        return Weight(checked_add(value_, o.value_));
    }
    Weight& operator+=(Weight o) { return *this = *this + o; }

    Weight operator-() const {
        if (is_plus_inf()) return minus_infinity();
        if (is_minus_inf()) return infinity();
        if (value_ == INT64_MIN) throw OverflowError("negation overflow");
        return Weight(-value_);
    }
    Weight operator-(Weight o) const { return *this + (-o); }

    friend constexpr bool operator==(Weight a, Weight b) noexcept {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) noexcept {
        if (a.kind_ != b.kind_)
            return static_cast<std::int8_t>(a.kind_) <=> static_cast<std::int8_t>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string str() const {
        if (is_plus_inf()) return "inf";
        if (is_minus_inf()) return "-inf";
        return std::to_string(value_);
    }

private:
    enum class Kind : std::int8_t { MinusInf = -1, Finite = 0, PlusInf = 1 };
    std::int64_t value_ = 0;
    Kind kind_ = Kind::Finite;
};

inline Weight max(Weight a, Weight b) { return a < b ? b : a; }
inline Weight min(Weight a, Weight b) { return b < a ? b : a; }

} // namespace eg

#endif
