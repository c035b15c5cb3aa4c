#pragma once

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "qborwein/quadratic.hpp"
#include "qborwein/rational.hpp"
#include "qborwein/ring.hpp"

namespace qborwein {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding:
/// lower bounds round down, upper bounds round up, so every operation
/// returns an enclosure of the exact result. The per-value precision is
/// carried along; binary operations work at the larger of the two.
class Interval {
public:
    static unsigned default_precision() { return default_bits().load(); }
    static void set_default_precision(unsigned bits) {
        default_bits().store(clamp_bits(bits));
    }

    Interval() : Interval(0L) {}
    Interval(long n) : Interval(n, default_precision()) {}
    Interval(long n, unsigned bits) {
        init(bits);
        mpfr_set_si(lo_, n, MPFR_RNDD);
        mpfr_set_si(hi_, n, MPFR_RNDU);
    }
    explicit Interval(const Rational& x) : Interval(x, default_precision()) {}
    Interval(const Rational& x, unsigned bits) {
        init(bits);
        mpfr_set_q(lo_, x.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, x.raw().get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Rational& lo, const Rational& hi, unsigned bits) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
        init(bits);
        mpfr_set_q(lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
    }

    /// Enclosure of a + b*sqrt(D).
    static Interval enclose(const Quadratic& x, unsigned bits) {
        Interval r(x.a(), bits);
        if (!x.b().is_zero()) {
            Interval root = sqrt_of(x.radicand(), bits);
            r = r + Interval(x.b(), bits) * root;
        }
        return r;
    }

    static Interval sqrt_of(unsigned long n, unsigned bits) {
        Interval r(0L, bits);
        mpfr_sqrt_ui(r.lo_, n, MPFR_RNDD);
        mpfr_sqrt_ui(r.hi_, n, MPFR_RNDU);
        return r;
    }

    Interval(const Interval& o) {
        init(o.bits_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept : bits_(o.bits_) {
        lo_[0] = o.lo_[0];
        hi_[0] = o.hi_[0];
        // Leave the source valid: fresh minimal-precision zeros.
        mpfr_init2(o.lo_, MPFR_PREC_MIN);
        mpfr_init2(o.hi_, MPFR_PREC_MIN);
        mpfr_set_zero(o.lo_, 1);
        mpfr_set_zero(o.hi_, 1);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            Interval tmp(o);
            swap(tmp);
        }
        return *this;
    }
    Interval& operator=(Interval&& o) noexcept {
        swap(o);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    unsigned precision() const { return bits_; }

    /// Three-valued sign: Zero only for the exact point [0, 0]; Unknown
    /// whenever the interval straddles or touches zero on both sides.
    Sign sign() const {
        if (mpfr_sgn(hi_) < 0) return Sign::Negative;
        if (mpfr_sgn(lo_) > 0) return Sign::Positive;
        if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::Zero;
        return Sign::Unknown;
    }

    bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    bool contains(const Rational& x) const {
        return mpfr_cmp_q(lo_, x.raw().get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_, x.raw().get_mpq_t()) >= 0;
    }

    Interval operator-() const {
        Interval r(0L, bits_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    Interval operator+(const Interval& o) const {
        Interval r(0L, std::max(bits_, o.bits_));
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    Interval operator-(const Interval& o) const { return *this + (-o); }

    Interval operator*(const Interval& o) const {
        const unsigned bits = std::max(bits_, o.bits_);
        Interval r(0L, bits);
        mpfr_t t;
        mpfr_init2(t, bits);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            mpfr_srcptr x = (i & 1) ? hi_ : lo_;
            mpfr_srcptr y = (i & 2) ? o.hi_ : o.lo_;
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return r;
    }

    Interval operator/(const Interval& o) const {
        if (o.contains_zero())
            throw std::domain_error("Interval: division by an interval containing zero");
        const unsigned bits = std::max(bits_, o.bits_);
        Interval r(0L, bits);
        mpfr_t t;
        mpfr_init2(t, bits);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            mpfr_srcptr x = (i & 1) ? hi_ : lo_;
            mpfr_srcptr y = (i & 2) ? o.hi_ : o.lo_;
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return r;
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    /// Value equality of the two endpoints (precision not compared).
    bool operator==(const Interval& o) const {
        return mpfr_equal_p(lo_, o.lo_) && mpfr_equal_p(hi_, o.hi_);
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    /// Exact hexadecimal-float image of an endpoint; round-trips losslessly.
    std::string lo_hex() const { return hex(lo_); }
    std::string hi_hex() const { return hex(hi_); }

    static Interval from_hex(const std::string& lo, const std::string& hi, unsigned bits) {
        Interval r(0L, bits);
        if (mpfr_set_str(r.lo_, lo.c_str(), 0, MPFR_RNDD) != 0 ||
            mpfr_set_str(r.hi_, hi.c_str(), 0, MPFR_RNDU) != 0)
            throw std::invalid_argument("Interval: bad hex-float literal");
        if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::invalid_argument("Interval: lo > hi");
        return r;
    }

    std::string to_string() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "[%.8Rg, %.8Rg]", lo_, hi_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static std::atomic<unsigned>& default_bits() {
        static std::atomic<unsigned> bits{128};
        return bits;
    }
    static unsigned clamp_bits(unsigned bits) {
        return std::clamp(bits, 8u, 1u << 20);
    }
    void init(unsigned bits) {
        bits_ = clamp_bits(bits);
        mpfr_init2(lo_, bits_);
        mpfr_init2(hi_, bits_);
    }
    void swap(Interval& o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(bits_, o.bits_);
    }
    static std::string hex(mpfr_srcptr v) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%Ra", v);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_t lo_, hi_;
    unsigned bits_ = 0;
};

inline Sign sign_of(const Interval& x) { return x.sign(); }

inline bool is_zero(const Interval& x) { return x.sign() == Sign::Zero; }

/// Certified nonnegativity only needs the lower endpoint, so [0, x] passes
/// even though its sign is undecided.
inline NonnegStatus nonneg_status(const Interval& x) {
    if (x.certainly_nonnegative()) return NonnegStatus::Ok;
    if (x.certainly_negative()) return NonnegStatus::Negative;
    return NonnegStatus::Unknown;
}

template <>
struct ring_traits<Interval> {
    static constexpr const char* name = "interval";
};

} // namespace qborwein
