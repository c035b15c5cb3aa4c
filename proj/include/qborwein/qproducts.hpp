#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qborwein/rational.hpp"
#include "qborwein/serialize.hpp"
#include "qborwein/series.hpp"

namespace qborwein {

/// In-place product of (1 - q^{s + k*modulus}) for k = 0..n-1 into f.
template <CoefficientRing R>
void mul_pochhammer_factors(Series<R>& f, int s, int modulus, int n) {
    if (modulus < 1) throw std::invalid_argument("pochhammer: modulus must be >= 1");
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    if (s < 1) throw std::invalid_argument("pochhammer: exponent must be >= 1");
    for (int k = 0; k < n; ++k) {
        const long e = long(s) + long(k) * modulus;
        if (e > f.order()) break; // higher factors cannot reach the truncation
        f = mul_binomial_factor(f, int(e), +1);
    }
}

/// (q^s; q^modulus)_n truncated at N: the finite q-shifted factorial
/// (1 - q^s)(1 - q^{s+M})...(1 - q^{s+(n-1)M}).
template <CoefficientRing R = Rational>
Series<R> pochhammer_finite(int s, int modulus, int n, int N) {
    Series<R> f = Series<R>::one(N);
    mul_pochhammer_factors(f, s, modulus, n);
    return f;
}

/// (q; q^3)_n (q^2; q^3)_n, the finite stage of the Borwein product.
inline Series<Rational> borwein_product_finite(int n, int N) {
    Series<Rational> f = Series<Rational>::one(N);
    mul_pochhammer_factors(f, 1, 3, n);
    mul_pochhammer_factors(f, 2, 3, n);
    return f;
}

/// [(q; q^3)_n (q^2; q^3)_n]^2, squared as a full series product.
inline Series<Rational> borwein_product_squared_finite(int n, int N) {
    const Series<Rational> f = borwein_product_finite(n, N);
    return f * f;
}

/// log (q, q^2; q^3)_inf = sum_{3 !| j} log(1 - q^j)
///                       = - sum_{3 !| j} sum_{m >= 1} q^{jm} / m.
/// Assembled directly from the double sum; independent of log_series, so the
/// two routes can be checked against each other.
inline Series<Rational> borwein_log_series(int N) {
    Series<Rational> L(N);
    for (int j = 1; j <= N; ++j) {
        if (j % 3 == 0) continue;
        for (int m = 1; long(j) * m <= N; ++m)
            L.at(j * m) = L[j * m] - Rational(1, m);
    }
    return L;
}

/// (q, q^2; q^3)_inf^d as a truncated series over R, for any exponent d
/// in R: exp(d * L) with L the logarithm above. Exact when R is exact.
template <CoefficientRing R>
Series<R> borwein_product_fractional(const R& d, int N) {
    Series<R> L = series_cast<R>(borwein_log_series(N));
    return exp_series(d * L);
}

/// Same product with certified interval coefficients: the exact exponent
/// (Rational or Quadratic) and every log coefficient are enclosed outward
/// at the given working precision before exponentiating.
template <typename E>
Series<Interval> borwein_product_fractional_interval(const E& d, int N, unsigned bits) {
    Interval dv = Interval::enclose(Quadratic(d), bits);
    Series<Rational> L = borwein_log_series(N);
    std::vector<Interval> c;
    c.reserve(size_t(N) + 1);
    for (int k = 0; k <= N; ++k) c.emplace_back(L[k], bits);
    return exp_series(dv * Series<Interval>(std::move(c)));
}

/// Truncated two-sided check of the triple product identity at z = +-1:
///   prod_{n=1}^{ceil(N/2)+1} (1 - q^{2n}) (1 + z q^{2n-1})^2
///   =  sum_{k=-K}^{K} z^k q^{k^2}   (mod q^{N+1}).
/// The product bound covers every factor whose lowest exponent fits under
/// the truncation; sum terms with |k| > K sit at exponents >= (K+1)^2, so
/// the right side is complete exactly when (K+1)^2 > N. Smaller K is
/// rejected rather than silently compared.
struct TripleProductReport {
    bool ok = true;
    int first_mismatch = -1;
    Rational product_side = Rational(0);
    Rational sum_side = Rational(0);
};

inline TripleProductReport jacobi_triple_product_check(int N, int K, int z) {
    if (z != 1 && z != -1)
        throw std::invalid_argument("jacobi_triple_product_check: z must be +1 or -1");
    if (K < 0 || long(K + 1) * (K + 1) <= N)
        throw std::invalid_argument("jacobi_triple_product_check: need (K+1)^2 > N");
    Series<Rational> prod = Series<Rational>::one(N);
    for (int n = 1; n <= (N + 1) / 2 + 1; ++n) {
        if (2 * n <= N) prod = mul_binomial_factor(prod, 2 * n, +1);
        if (2 * n - 1 <= N) {
            // z = +-1 makes z^{-1} = z, so the two odd factors coincide.
            const int s = (z == 1) ? -1 : +1;
            prod = mul_binomial_factor(prod, 2 * n - 1, s);
            prod = mul_binomial_factor(prod, 2 * n - 1, s);
        }
    }
    Series<Rational> sum = Series<Rational>::one(N);
    Rational zk(1);
    for (long k = 1; k <= K; ++k) {
        zk = zk * Rational(z);
        if (k * k <= N) sum.at(int(k * k)) = Rational(2) * zk;
    }
    TripleProductReport rep;
    for (int t = 0; t <= N; ++t)
        if (!(prod[t] == sum[t])) {
            rep.ok = false;
            rep.first_mismatch = t;
            rep.product_side = prod[t];
            rep.sum_side = sum[t];
            break;
        }
    return rep;
}

/// Identifies one expansion for caching and reporting: which product, how
/// far it was truncated, and (for fractional powers) the exact exponent.
/// The JSON form is canonical: nlohmann::json orders keys, so dump() of
/// equal specs is byte-identical.
struct ProductSpec {
    std::vector<int> residues{1, 2};
    int modulus = 3;
    int n = -1;      // -1 encodes the infinite product
    json d = nullptr; // coeff_to_json of the exponent, null for plain finite products
    int N = 0;

    json to_json() const {
        json j;
        j["version"] = 1;
        j["residues"] = residues;
        j["modulus"] = modulus;
        if (n < 0)
            j["n"] = "inf";
        else
            j["n"] = n;
        j["d"] = d;
        j["N"] = N;
        return j;
    }

    bool operator==(const ProductSpec& o) const { return to_json() == o.to_json(); }

    static ProductSpec from_json(const json& j) {
        if (j.at("version").get<int>() != 1)
            throw std::invalid_argument("ProductSpec: unsupported version");
        ProductSpec s;
        s.residues = j.at("residues").get<std::vector<int>>();
        s.modulus = j.at("modulus").get<int>();
        if (j.at("n").is_string()) {
            if (j.at("n").get<std::string>() != "inf")
                throw std::invalid_argument("ProductSpec: n must be an integer or \"inf\"");
            s.n = -1;
        } else {
            s.n = j.at("n").get<int>();
        }
        s.d = j.at("d");
        s.N = j.at("N").get<int>();
        return s;
    }

    template <CoefficientRing R>
    static ProductSpec fractional(const R& d, int N, bool squared = false) {
        ProductSpec s;
        if (squared) s.residues = {1, 1, 2, 2};
        s.d = coeff_to_json(d);
        s.N = N;
        return s;
    }

    static ProductSpec finite(int n, int N, bool squared = false) {
        ProductSpec s;
        if (squared) s.residues = {1, 1, 2, 2};
        s.n = n;
        s.N = N;
        return s;
    }
};

} // namespace qborwein
