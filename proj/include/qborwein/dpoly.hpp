#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qborwein/rational.hpp"
#include "qborwein/ring.hpp"

namespace qborwein {

/// Polynomial in the exponent variable d with Rational coefficients,
/// stored densely by ascending power and kept trimmed (no trailing zeros;
/// the zero polynomial has an empty list).
class DPoly {
public:
    DPoly() = default;
    DPoly(long n) {
        if (n != 0) c_.emplace_back(n);
    }
    DPoly(const Rational& r) {
        if (!r.is_zero()) c_.push_back(r);
    }
    explicit DPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The polynomial "d" itself.
    static DPoly variable() { return DPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of d^k (zero beyond the degree).
    const Rational& coeff(int k) const {
        static const Rational zero(0);
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[size_t(k)] : zero;
    }
    const std::vector<Rational>& coefficients() const { return c_; }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("DPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    DPoly operator-() const {
        DPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    DPoly operator+(const DPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
        for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
        return DPoly(std::move(r));
    }
    DPoly operator-(const DPoly& o) const { return *this + (-o); }

    DPoly operator*(const DPoly& o) const {
        if (is_zero() || o.is_zero()) return DPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return DPoly(std::move(r));
    }

    /// Division is defined for unit (nonzero constant) divisors only; the
    /// polynomial ring has no other exact quotients that the series
    /// recurrences require.
    DPoly operator/(const DPoly& o) const {
        if (o.is_zero()) throw std::domain_error("DPoly: division by zero");
        if (!o.is_constant())
            throw std::domain_error("DPoly: division only by nonzero constants");
        return *this * DPoly(Rational(1) / o.c_[0]);
    }

    DPoly& operator+=(const DPoly& o) { return *this = *this + o; }
    DPoly& operator-=(const DPoly& o) { return *this = *this - o; }
    DPoly& operator*=(const DPoly& o) { return *this = *this * o; }

    bool operator==(const DPoly& o) const { return c_ == o.c_; }
    bool operator!=(const DPoly& o) const { return c_ != o.c_; }

    /// Exact Horner evaluation into any ring containing the rationals.
    template <typename T>
    T evaluate(const T& x) const {
        T acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + T(c_[k]);
        return acc;
    }

    DPoly derivative() const {
        if (c_.size() <= 1) return DPoly();
        std::vector<Rational> r(c_.size() - 1, Rational(0));
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(long(k));
        return DPoly(std::move(r));
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += c_[k].signum() < 0 ? " - " : " + ";
            else if (c_[k].signum() < 0) s += "-";
            const Rational a = c_[k].abs();
            if (k == 0 || !a.is_one()) s += a.to_string();
            if (k > 0) {
                if (!a.is_one()) s += "*";
                s += "d";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Signs of polynomials in d depend on where d lives; the query is rejected
/// here and answered by root analysis in the symbolic layer.
inline Sign sign_of(const DPoly&) {
    throw std::domain_error("DPoly: sign of a polynomial in d is region-dependent; "
                            "evaluate at a point or use the feasible-region machinery");
}

inline bool is_zero(const DPoly& p) { return p.is_zero(); }

template <>
struct ring_traits<DPoly> {
    static constexpr const char* name = "dpoly";
};

} // namespace qborwein
