#pragma once

#include <stdexcept>
#include <string>

#include "qborwein/rational.hpp"
#include "qborwein/ring.hpp"

namespace qborwein {

/// Element a + b*sqrt(D) of a real quadratic field, with exact arithmetic
/// and an exact sign query that never touches floating point.
///
/// D is a square-free integer >= 2 carried per element; b == 0 normalizes
/// to D == 0, the tag for "plain rational". Mixing two elements with
/// different nonzero D throws.
class Quadratic {
public:
    Quadratic() : a_(0), b_(0), d_(0) {}
    Quadratic(long n) : a_(n), b_(0), d_(0) {}
    Quadratic(const Rational& a) : a_(a), b_(0), d_(0) {}
    Quadratic(Rational a, Rational b, unsigned long D) : a_(std::move(a)), b_(std::move(b)), d_(D) {
        if (b_.is_zero()) {
            d_ = 0;
        } else {
            if (D < 2) throw std::domain_error("Quadratic: D must be >= 2");
            if (!is_square_free(D)) throw std::domain_error("Quadratic: D must be square-free");
        }
    }

    static Quadratic sqrt_of(unsigned long D) { return Quadratic(Rational(0), Rational(1), D); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    unsigned long radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }

    Quadratic conjugate() const { return make(a_, -b_, d_); }

    /// a^2 - b^2 D, the field norm; zero only for the zero element.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(long(d_)); }

    Quadratic operator-() const { return make(-a_, -b_, d_); }

    Quadratic operator+(const Quadratic& o) const {
        return make(a_ + o.a_, b_ + o.b_, merge(d_, o.d_));
    }
    Quadratic operator-(const Quadratic& o) const {
        return make(a_ - o.a_, b_ - o.b_, merge(d_, o.d_));
    }
    Quadratic operator*(const Quadratic& o) const {
        const unsigned long D = merge(d_, o.d_);
        // (a + b s)(a' + b' s) = (a a' + b b' D) + (a b' + a' b) s,  s = sqrt(D)
        return make(a_ * o.a_ + b_ * o.b_ * Rational(long(D)), a_ * o.b_ + o.a_ * b_, D);
    }
    Quadratic operator/(const Quadratic& o) const {
        if (o.is_zero()) throw std::domain_error("Quadratic: division by zero");
        const unsigned long D = merge(d_, o.d_);
        const Rational n = o.norm();
        const Quadratic num = *this * o.conjugate();
        return make(num.a_ / n, num.b_ / n, D);
    }
    Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
    Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
    Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
    Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

    bool operator==(const Quadratic& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_.is_zero() || d_ == o.d_);
    }
    bool operator!=(const Quadratic& o) const { return !(*this == o); }

    /// Exact sign, resolved purely by rational comparisons. For mixed-sign
    /// a, b the decision compares a^2 against b^2 D; since D is square-free
    /// the two squares can only tie at zero.
    int signum() const {
        const int sa = a_.signum();
        const int sb = b_.signum();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_;
        const Rational rhs = b_ * b_ * Rational(long(d_));
        if (lhs == rhs) return 0; // unreachable for square-free D >= 2
        const bool a_dominates = lhs > rhs;
        return a_dominates ? sa : sb;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        return a_.to_string() + (b_.signum() < 0 ? " - " : " + ") + b_.abs().to_string() +
               "*sqrt(" + std::to_string(d_) + ")";
    }

    static bool is_square_free(unsigned long n) {
        if (n == 0) return false;
        for (unsigned long p = 2; p * p <= n; ++p) {
            if (n % (p * p) == 0) return false;
            while (n % p == 0) n /= p;
        }
        return true;
    }

private:
    // Bypasses the square-free check; d is taken from already-valid inputs.
    static Quadratic make(Rational a, Rational b, unsigned long d) {
        Quadratic r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.d_ = r.b_.is_zero() ? 0 : d;
        return r;
    }

    static unsigned long merge(unsigned long x, unsigned long y) {
        if (x == 0) return y;
        if (y == 0 || x == y) return x;
        throw std::domain_error("Quadratic: mixing elements of different fields");
    }

    Rational a_, b_;
    unsigned long d_;
};

inline Sign sign_of(const Quadratic& x) {
    const int s = x.signum();
    return s < 0 ? Sign::Negative : s > 0 ? Sign::Positive : Sign::Zero;
}

inline bool is_zero(const Quadratic& x) { return x.is_zero(); }

template <>
struct ring_traits<Quadratic> {
    static constexpr const char* name = "quadratic";
};

} // namespace qborwein
