#pragma once

// Slow reference implementations used only by the tests. Everything here
// goes through a different route than the library: full naive convolutions,
// factor-at-a-time products, Taylor sums, and explicit binomial formulas,
// so agreement between the two sides is evidence, not a tautology.

#include <random>
#include <vector>

#include "qborwein/rational.hpp"
#include "qborwein/series.hpp"

namespace oracle {

using qborwein::Rational;
using Poly = std::vector<Rational>; // dense, index = exponent, size = order + 1

inline Poly zero_poly(int N) { return Poly(size_t(N) + 1, Rational(0)); }

inline Poly one_poly(int N) {
    Poly p = zero_poly(N);
    p[0] = Rational(1);
    return p;
}

// schoolbook convolution, truncated at a's size
inline Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

inline Poly mul_one_minus_qe(Poly p, int e) {
    for (size_t t = p.size(); t-- > 0;)
        if (t >= size_t(e)) p[t] -= p[t - size_t(e)];
    return p;
}

inline Poly product_of_factors(const std::vector<int>& exps, int N) {
    Poly p = one_poly(N);
    for (int e : exps) p = mul_one_minus_qe(std::move(p), e);
    return p;
}

inline Poly borwein_finite(int n, int N) {
    std::vector<int> exps;
    for (int k = 0; k < n; ++k) {
        exps.push_back(1 + 3 * k);
        exps.push_back(2 + 3 * k);
    }
    return product_of_factors(exps, N);
}

// every factor exponent <= N is enough to pin all coefficients through q^N
inline Poly borwein_infinite(int N) {
    std::vector<int> exps;
    for (int e = 1; e <= N; ++e)
        if (e % 3 != 0) exps.push_back(e);
    return product_of_factors(exps, N);
}

inline Rational binomial(const Rational& d, int k) {
    Rational c(1);
    for (int i = 0; i < k; ++i) c *= (d - Rational(i)) / Rational(i + 1);
    return c;
}

// (1 - q)^d = sum_k C(d, k) (-q)^k
inline Poly one_minus_q_pow(const Rational& d, int N) {
    Poly p = zero_poly(N);
    for (int k = 0; k <= N; ++k) {
        p[size_t(k)] = binomial(d, k);
        if (k % 2) p[size_t(k)] = -p[size_t(k)];
    }
    return p;
}

// exp f = 1 + sum_{k>=1} f^k / k!, valid for f with zero constant term
inline Poly exp_taylor(const Poly& f, int N) {
    Poly out = one_poly(N), pw = one_poly(N);
    Rational fact(1);
    for (int k = 1; k <= N; ++k) {
        pw = mul(pw, f);
        fact *= Rational(k);
        for (size_t t = 0; t < out.size(); ++t) out[t] += pw[t] / fact;
    }
    return out;
}

// log f = -sum_{k>=1} (1 - f)^k / k, valid for f with constant term one
inline Poly log_mercator(const Poly& f, int N) {
    Poly u = f;
    for (auto& x : u) x = -x;
    u[0] += Rational(1);
    Poly out = zero_poly(N), pw = one_poly(N);
    for (int k = 1; k <= N; ++k) {
        pw = mul(pw, u);
        for (size_t t = 0; t < out.size(); ++t) out[t] -= pw[t] / Rational(k);
    }
    return out;
}

inline Poly int_pow(const Poly& f, int k) {
    Poly out = one_poly(int(f.size()) - 1);
    for (int i = 0; i < k; ++i) out = mul(out, f);
    return out;
}

inline qborwein::Series<Rational> to_series(const Poly& p) {
    return qborwein::Series<Rational>(p);
}

inline Poly from_series(const qborwein::Series<Rational>& f) {
    Poly p(size_t(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) p[size_t(k)] = f[k];
    return p;
}

inline qborwein::Series<Rational> random_series(std::mt19937_64& rng, int N,
                                                bool unit_constant) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 6);
    std::vector<Rational> c(size_t(N) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (unit_constant) c[0] = Rational(1);
    return qborwein::Series<Rational>(std::move(c));
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
    return Rational(num(rng), den(rng));
}

} // namespace oracle
