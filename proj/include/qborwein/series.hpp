#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qborwein/ring.hpp"

namespace qborwein {

/// Dense truncated formal power series in q: coefficients c_0..c_N over one
/// coefficient ring, with the truncation order N an explicit part of the
/// value. Binary operations truncate to the smaller order; nothing is ever
/// zero-extended, so no coefficient is reported that was not computed.
template <CoefficientRing R>
class Series {
public:
    explicit Series(int order) : c_(check_order(order) + 1, R(0)) {}
    Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
    }

    static Series one(int order) {
        Series s(order);
        s.c_[0] = R(1);
        return s;
    }
    static Series constant(const R& value, int order) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& operator[](int k) const { return c_.at(size_t(k)); }
    R& at(int k) { return c_.at(size_t(k)); }
    const std::vector<R>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const R& c : c_)
            if (!(c == R(0))) return false;
        return true;
    }

    /// Copy truncated (or identical) at the given order; never extends.
    Series truncated(int new_order) const {
        if (new_order > order())
            throw std::invalid_argument("Series: cannot extend truncation order");
        return Series(std::vector<R>(c_.begin(), c_.begin() + new_order + 1));
    }

    /// Strict equality: same order and coefficient-wise equal.
    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return c_ != o.c_; }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: order must be nonnegative");
        return order;
    }

    std::vector<R> c_;
};

/// Coefficient-wise equality through the smaller of the two orders.
template <CoefficientRing R>
bool agree_on_common_order(const Series<R>& f, const Series<R>& g) {
    const int n = std::min(f.order(), g.order());
    for (int k = 0; k <= n; ++k)
        if (!(f[k] == g[k])) return false;
    return true;
}

template <CoefficientRing R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
    const int n = std::min(f.order(), g.order());
    Series<R> r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = f[k] + g[k];
    return r;
}

template <CoefficientRing R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
    const int n = std::min(f.order(), g.order());
    Series<R> r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = f[k] - g[k];
    return r;
}

template <CoefficientRing R>
Series<R> operator-(const Series<R>& f) {
    Series<R> r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = -f[k];
    return r;
}

/// Cauchy product truncated at min(order(f), order(g)).
template <CoefficientRing R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    const int n = std::min(f.order(), g.order());
    Series<R> r(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i] == R(0)) continue;
        for (int j = 0; i + j <= n; ++j) r.at(i + j) = r.at(i + j) + f[i] * g[j];
    }
    return r;
}

template <CoefficientRing R>
Series<R> operator*(const R& scalar, const Series<R>& f) {
    Series<R> r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = scalar * f[k];
    return r;
}

/// Termwise derivative d/dq; the order drops by one (an order-0 input
/// yields the order-0 zero series).
template <CoefficientRing R>
Series<R> derivative(const Series<R>& f) {
    Series<R> r(std::max(f.order() - 1, 0));
    for (int k = 1; k <= f.order(); ++k) r.at(k - 1) = R(k) * f[k];
    return r;
}

/// Substitution q -> q^m: coefficient of q^(m k) becomes c_k, order m*N.
template <CoefficientRing R>
Series<R> inflate(const Series<R>& f, int m) {
    if (m < 1) throw std::invalid_argument("inflate: m must be >= 1");
    Series<R> r(f.order() * m);
    for (int k = 0; k <= f.order(); ++k) r.at(m * k) = f[k];
    return r;
}

/// Multiplication by q^r (coefficients shift up; the tail is truncated away).
template <CoefficientRing R>
Series<R> shift_up(const Series<R>& f, int r) {
    if (r < 0) throw std::invalid_argument("shift_up: negative shift");
    Series<R> out(f.order());
    for (int k = 0; k + r <= f.order(); ++k) out.at(k + r) = f[k];
    return out;
}

/// O(N) multiplication by a sparse binomial: (1 - q^j) for sign = +1,
/// (1 + q^j) for sign = -1.
template <CoefficientRing R>
Series<R> mul_binomial_factor(const Series<R>& f, int j, int sign) {
    if (j < 1) throw std::invalid_argument("mul_binomial_factor: j must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("mul_binomial_factor: sign must be +-1");
    Series<R> r = f;
    if (sign > 0) {
        for (int k = f.order(); k >= j; --k) r.at(k) = r[k] - f[k - j];
    } else {
        for (int k = f.order(); k >= j; --k) r.at(k) = r[k] + f[k - j];
    }
    return r;
}

/// Formal logarithm. Requires c_0 = 1; the result g has g_0 = 0 and
/// satisfies g' f = f' through order N-1, computed by the first-order
/// recurrence  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
template <CoefficientRing R>
Series<R> log_series(const Series<R>& f) {
    if (!(f[0] == R(1)))
        throw std::domain_error("log_series: constant term must be 1");
    const int n = f.order();
    Series<R> g(n);
    for (int t = 1; t <= n; ++t) {
        R acc = R(t) * f[t];
        for (int k = 1; k < t; ++k) acc = acc - R(k) * g[k] * f[t - k];
        g.at(t) = acc / R(t);
    }
    return g;
}

/// Formal exponential. Requires c_0 = 0; the result g has g_0 = 1 and
/// satisfies g' = f' g through order N-1, via
/// n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
template <CoefficientRing R>
Series<R> exp_series(const Series<R>& f) {
    if (!(f[0] == R(0)))
        throw std::domain_error("exp_series: constant term must be 0");
    const int n = f.order();
    Series<R> g = Series<R>::one(n);
    for (int t = 1; t <= n; ++t) {
        R acc(0);
        for (int k = 1; k <= t; ++k) acc = acc + R(k) * f[k] * g[t - k];
        g.at(t) = acc / R(t);
    }
    return g;
}

/// Real (or formal) power f^d for any exponent d in the coefficient ring.
/// Requires c_0 = 1. The result is the unique g with g_0 = 1 satisfying the
/// differential identity g' f = d f' g, computed coefficient-by-coefficient:
///   n g_n = d * sum_{j=1}^{n} j f_j g_{n-j}  -  sum_{j=1}^{n-1} j g_j f_{n-j}.
/// For f = 1 - q this reproduces Newton's generalized binomial series.
template <CoefficientRing R>
Series<R> pow_series(const Series<R>& f, const R& d) {
    if (!(f[0] == R(1)))
        throw std::domain_error("pow_series: constant term must be 1");
    const int n = f.order();
    Series<R> g = Series<R>::one(n);
    for (int t = 1; t <= n; ++t) {
        R acc(0);
        for (int j = 1; j <= t; ++j) acc = acc + R(j) * f[j] * (d * g[t - j]);
        for (int j = 1; j < t; ++j) acc = acc - R(j) * g[j] * f[t - j];
        g.at(t) = acc / R(t);
    }
    return g;
}

/// Coefficient-wise ring change (e.g. Rational -> Quadratic/DPoly/Interval).
template <CoefficientRing To, CoefficientRing From>
Series<To> series_cast(const Series<From>& f) {
    std::vector<To> c;
    c.reserve(size_t(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) c.emplace_back(To(f[k]));
    return Series<To>(std::move(c));
}

} // namespace qborwein
