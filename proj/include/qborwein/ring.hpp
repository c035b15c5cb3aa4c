#pragma once

#include <concepts>

namespace qborwein {

/// Result of an exact or certified sign query.
enum class Sign { Negative, Zero, Positive, Unknown };

/// Verdict of a per-coefficient nonnegativity test.
enum class NonnegStatus { Ok, Negative, Unknown };

/// Requirements a scalar type must meet to serve as a series coefficient.
/// All four rings (Rational, Quadratic, DPoly, Interval) model this.
template <typename R>
concept CoefficientRing = std::copyable<R> && requires(const R a, const R b) {
    { R(0) };
    { R(1) };
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a / b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
};

/// Ring metadata; specialized next to each ring type.
template <typename R>
struct ring_traits;

/// Default nonnegativity test: derived from the exact sign query.
/// The interval ring overloads this (a certified lower bound >= 0 is
/// enough even when the sign itself is not decided).
template <typename R>
NonnegStatus nonneg_status(const R& x) {
    switch (sign_of(x)) {
        case Sign::Negative: return NonnegStatus::Negative;
        case Sign::Unknown: return NonnegStatus::Unknown;
        default: return NonnegStatus::Ok;
    }
}

} // namespace qborwein
