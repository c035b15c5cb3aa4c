#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qborwein/dpoly.hpp"
#include "qborwein/quadratic.hpp"
#include "qborwein/rational.hpp"
#include "qborwein/ring.hpp"

namespace qborwein {

namespace detail {

/// Integer polynomials, ascending coefficients, trimmed: {} is zero and a
/// nonempty vector has a nonzero leading entry. All root work happens here;
/// rational inputs are cleared to a primitive integer image first (same
/// roots, bounded coefficient growth).
using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int zdeg(const ZPoly& p) { return int(p.size()) - 1; }

inline mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline void make_primitive(ZPoly& p) {
    ztrim(p);
    const mpz_class g = zcontent(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly from_dpoly(const DPoly& p) {
    if (p.degree() < 0) return {};
    mpz_class l(1);
    for (int k = 0; k <= p.degree(); ++k)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.coeff(k).denominator().get_mpz_t());
    ZPoly z(size_t(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        z[size_t(k)] = p.coeff(k).numerator() * (l / p.coeff(k).denominator());
    make_primitive(z);
    return z;
}

inline DPoly to_dpoly(const ZPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& z : p) c.emplace_back(Rational(z, mpz_class(1)));
    return c.empty() ? DPoly() : DPoly(std::move(c));
}

inline ZPoly zderiv(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * long(k);
    return d;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

/// sign of p(r), exactly: Horner on the homogenized form
/// sum c_k num^k den^(n-k), den > 0.
inline int zsign_at(const ZPoly& p, const Rational& r) {
    if (p.empty()) return 0;
    const mpz_class num = r.numerator(), den = r.denominator();
    mpz_class acc = p.back(), dp(1);
    for (int k = zdeg(p) - 1; k >= 0; --k) {
        dp *= den;
        acc = acc * num + p[size_t(k)] * dp;
    }
    return sgn(acc);
}

/// a / b where b exactly divides a; every quotient coefficient division is
/// checked, so inexact input is a logic error, not silent corruption.
inline ZPoly zdivexact(ZPoly a, const ZPoly& b) {
    if (b.empty()) throw std::logic_error("zdivexact: division by zero polynomial");
    ztrim(a);
    if (a.empty()) return {};
    if (zdeg(a) < zdeg(b)) throw std::logic_error("zdivexact: not divisible");
    ZPoly q(size_t(zdeg(a) - zdeg(b)) + 1, mpz_class(0));
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        const int k = zdeg(a) - zdeg(b);
        mpz_class qc, rem;
        mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) throw std::logic_error("zdivexact: not divisible");
        q[size_t(k)] = qc;
        for (size_t i = 0; i < b.size(); ++i) a[size_t(k) + i] -= qc * b[i];
        ztrim(a);
    }
    if (!a.empty()) throw std::logic_error("zdivexact: not divisible");
    return q;
}

/// Primitive PRS gcd; result primitive with positive leading coefficient.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        // pseudo-remainder of a by b
        ZPoly r = a;
        const mpz_class lb = b.back();
        while (!r.empty() && zdeg(r) >= zdeg(b)) {
            const int k = zdeg(r) - zdeg(b);
            const mpz_class lr = r.back();
            for (auto& c : r) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[size_t(k) + i] -= lr * b[i];
            ztrim(r);
        }
        a = std::move(b);
        b = std::move(r);
        make_primitive(b);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a.empty() ? ZPoly{} : a;
}

/// Yun's algorithm: factors f_i (primitive, positive leading coefficient)
/// such that p = const * prod f_i^i with the f_i square-free and coprime.
/// Constant factors are omitted.
inline std::vector<std::pair<ZPoly, int>> square_free_decomposition(ZPoly p) {
    make_primitive(p);
    if (zdeg(p) < 1) return {};
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    const ZPoly dp = zderiv(p);
    const ZPoly g = zgcd(p, dp);
    if (zdeg(g) == 0) return {{p, 1}};
    ZPoly c = zdivexact(p, g);
    ZPoly d = zsub(zdivexact(dp, g), zderiv(c));
    std::vector<std::pair<ZPoly, int>> out;
    for (int i = 1; zdeg(c) >= 1; ++i) {
        ZPoly f = zgcd(c, d);
        c = zdivexact(c, f);
        d = zsub(zdivexact(d, f), zderiv(c));
        if (zdeg(f) >= 1) out.emplace_back(std::move(f), i);
    }
    return out;
}

/// In-place p(x) -> p(x+1) (integer Pascal triangle pass).
inline void taylor_shift1(ZPoly& p) {
    const int n = zdeg(p);
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) p[size_t(j)] += p[size_t(j) + 1];
}

inline int variations(const ZPoly& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        const int s = sgn(c);
        if (s != 0) {
            if (last != 0 && s != last) ++v;
            last = s;
        }
    }
    return v;
}

/// Descartes bound on the number of roots in the open interval (0,1):
/// variations of (x+1)^n p(1/(x+1)), i.e. of the reversed-then-shifted
/// coefficient vector. 0 and 1 are exact counts.
inline int var01(ZPoly p) {
    std::reverse(p.begin(), p.end());
    ztrim(p);
    taylor_shift1(p);
    return variations(p);
}

/// Integer polynomial with the same roots in t-space as f(a + (b-a) t)
/// (equal up to a positive constant).
inline ZPoly compose_affine(const ZPoly& f, const Rational& a, const Rational& b) {
    if (f.empty()) return {};
    const Rational step = b - a;
    mpz_class Q;
    mpz_lcm(Q.get_mpz_t(), a.denominator().get_mpz_t(), step.denominator().get_mpz_t());
    const mpz_class A = a.numerator() * (Q / a.denominator());
    const mpz_class B = step.numerator() * (Q / step.denominator());
    // Horner: res <- res*(A + B t) + c_k Q^(n-k)
    ZPoly res{f.back()};
    mpz_class qp(1);
    for (int k = zdeg(f) - 1; k >= 0; --k) {
        qp *= Q;
        res.push_back(0);
        for (size_t i = res.size() - 1; i > 0; --i) res[i] = res[i] * A + res[i - 1] * B;
        res[0] = res[0] * A + f[size_t(k)] * qp;
        ztrim(res);
    }
    make_primitive(res);
    return res;
}

inline ZPoly linear_of(const Rational& r) {
    // primitive polynomial with single root r and positive leading coefficient
    return ZPoly{-r.numerator(), r.denominator()};
}

struct Isolated01 {
    std::vector<Rational> rational_roots;
    std::vector<std::pair<Rational, Rational>> intervals;
};

/// Descartes/bisection root isolation on (0,1) for square-free g with
/// g(0) != 0 and g(1) != 0. Every node keeps those endpoint conditions:
/// when a bisection midpoint lands exactly on a root, the root is recorded
/// and its linear factor removed from both children.
inline Isolated01 isolate01(ZPoly g) {
    Isolated01 out;
    struct Node {
        ZPoly p;
        Rational lo, w;
    };
    std::vector<Node> stack;
    make_primitive(g);
    stack.push_back({std::move(g), Rational(0), Rational(1)});
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        const int v = var01(nd.p);
        if (v == 0) continue;
        if (v == 1) {
            out.intervals.emplace_back(nd.lo, nd.lo + nd.w);
            continue;
        }
        const int n = zdeg(nd.p);
        ZPoly left = nd.p; // p(x/2) * 2^n
        mpz_class pw(1);
        for (int k = n; k >= 0; --k) {
            left[size_t(k)] *= pw;
            pw <<= 1;
        }
        make_primitive(left);
        const Rational mid = nd.lo + nd.w / Rational(2);
        mpz_class at1(0);
        for (const auto& c : left) at1 += c;
        if (at1 == 0) { // midpoint is a root
            out.rational_roots.push_back(mid);
            left = zdivexact(left, ZPoly{-1, 1});
            make_primitive(left);
        }
        ZPoly right = left;
        taylor_shift1(right);
        make_primitive(right);
        stack.push_back({std::move(left), nd.lo, nd.w / Rational(2)});
        stack.push_back({std::move(right), mid, nd.w / Rational(2)});
    }
    return out;
}

/// Simplest rational strictly inside the open interval (lo, hi): smallest
/// denominator, found by walking the continued-fraction (Stern-Brocot)
/// structure of the gap.
inline Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: need lo < hi");
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    const Rational fl(f, mpz_class(1));
    if (fl + Rational(1) < hi) return fl + Rational(1);
    const Rational lo1 = lo - fl, hi1 = hi - fl; // now 0 <= lo1 < hi1 <= 1
    if (lo1.is_zero()) {
        // simplest in (0, hi1) is 1/k for the smallest admissible k
        mpz_class k;
        mpz_fdiv_q(k.get_mpz_t(), hi1.denominator().get_mpz_t(), hi1.numerator().get_mpz_t());
        k += 1;
        return fl + Rational(mpz_class(1), k);
    }
    return fl + Rational(1) / simplest_rational_between(Rational(1) / hi1, Rational(1) / lo1);
}

/// Heuristic test whether the single root inside (lo, hi) is rational:
/// bisect a scratch copy hard, then try the simplest rational in the gap.
/// A miss is not a proof of irrationality; callers only use hits.
inline std::optional<Rational> probe_rational_root(const ZPoly& f, Rational lo, Rational hi) {
    int slo = zsign_at(f, lo);
    const Rational eps(mpz_class(1), mpz_class(1) << 80);
    for (int it = 0; it < 1200 && hi - lo > eps; ++it) {
        const Rational mid = (lo + hi) / Rational(2);
        const int sm = zsign_at(f, mid);
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    const Rational cand = simplest_rational_between(lo, hi);
    if (zsign_at(f, cand) == 0) return cand;
    return std::nullopt;
}

} // namespace detail

struct IsolatedRoot;
class AlgebraicNumber;
inline std::vector<IsolatedRoot> isolate_in(const DPoly& p, const Rational& lo,
                                            const Rational& hi);

/// A real algebraic number: a square-free integer polynomial together with
/// an isolating interval holding exactly one of its real roots. Intervals
/// refine by exact bisection; refinement never changes the value, so all
/// refining operations are const over mutable state. Rational values are
/// the degenerate case lo == hi with a linear polynomial.
class AlgebraicNumber {
public:
    AlgebraicNumber(const Rational& value)
        : p_(detail::linear_of(value)), lo_(value), hi_(value), slo_(0) {}

    /// General constructor: reduces p to its square-free part and requires
    /// a sign change across [lo, hi] with nonvanishing endpoints, which
    /// certifies exactly one root when the interval is isolating.
    AlgebraicNumber(const DPoly& p, const Rational& lo, const Rational& hi) {
        detail::ZPoly z = detail::from_dpoly(p);
        if (z.empty()) throw std::invalid_argument("AlgebraicNumber: zero polynomial");
        const detail::ZPoly g = detail::zgcd(z, detail::zderiv(z));
        if (detail::zdeg(g) >= 1) z = detail::zdivexact(z, g);
        if (z.back() < 0)
            for (auto& c : z) c = -c;
        init_interval(std::move(z), lo, hi);
    }

    bool is_rational() const { return lo_ == hi_; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("AlgebraicNumber: not known rational");
        return lo_;
    }

    Rational lower() const { return lo_; }
    Rational upper() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    /// Defining square-free polynomial with every discovered rational
    /// factor removed; integer coefficients, positive leading coefficient.
    DPoly minimal_polynomial() const { return detail::to_dpoly(p_); }

    /// One exact bisection step; may collapse to a rational if the
    /// midpoint hits the root.
    void refine() const {
        if (is_rational()) return;
        const Rational mid = (lo_ + hi_) / Rational(2);
        const int sm = detail::zsign_at(p_, mid);
        if (sm == 0) {
            collapse(mid);
            return;
        }
        if (sm == slo_)
            lo_ = mid;
        else
            hi_ = mid;
    }

    /// Refines until the first time the width is <= w, then stops.
    void refine_to_width(const Rational& w) const {
        while (hi_ - lo_ > w) refine();
    }

    /// Whether the current isolating interval contains r.
    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }

    /// sign of (value - r), exact.
    int compare_rational(const Rational& r) const {
        if (is_rational()) return lo_ < r ? -1 : (lo_ == r ? 0 : 1);
        for (;;) {
            if (r <= lo_) return 1; // the root lies strictly inside (lo, hi)
            if (r >= hi_) return -1;
            if (detail::zsign_at(p_, r) == 0) return 0; // unique root in the interval
            refine();
            if (is_rational()) return lo_ < r ? -1 : (lo_ == r ? 0 : 1);
        }
    }

    /// Exact three-way comparison. Equality of two irrational values is
    /// certified through a sign change of gcd(p, o.p) inside the overlap
    /// of the two isolating intervals.
    int compare(const AlgebraicNumber& o) const {
        if (is_rational()) return -o.compare_rational(lo_);
        if (o.is_rational()) return compare_rational(o.lo_);
        const detail::ZPoly g = detail::zgcd(p_, o.p_);
        for (;;) {
            if (hi_ <= o.lo_) return -1;
            if (o.hi_ <= lo_) return 1;
            if (detail::zdeg(g) >= 1) {
                const Rational a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
                const int sa = detail::zsign_at(g, a), sb = detail::zsign_at(g, b);
                if (sa != 0 && sb != 0 && sa != sb) return 0;
            }
            refine();
            o.refine();
            if (is_rational()) return -o.compare_rational(lo_);
            if (o.is_rational()) return compare_rational(o.lo_);
        }
    }

    bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }

    /// Exact sign of h at this value. Zero is certified via
    /// gcd(p, h); nonzero via a Descartes count of 0 for h over the
    /// refined isolating interval, which makes the endpoint sign the sign
    /// at the root.
    Sign sign_at(const DPoly& h) const {
        if (is_rational()) return sign_of_rational(h.evaluate<Rational>(lo_));
        detail::ZPoly H = detail::from_dpoly(h);
        if (H.empty()) return Sign::Zero;
        const detail::ZPoly g = detail::zgcd(p_, H);
        if (detail::zdeg(g) >= 1) {
            for (;;) {
                const int sa = detail::zsign_at(g, lo_), sb = detail::zsign_at(g, hi_);
                if (sa != 0 && sb != 0 && sa != sb) return Sign::Zero;
                if (detail::var01(detail::compose_affine(g, lo_, hi_)) == 0) break;
                refine();
                if (is_rational()) return sign_of_rational(h.evaluate<Rational>(lo_));
            }
        }
        int flip = 1;
        for (;;) {
            // endpoints may be roots of h (never of p_); strip them, tracking
            // the sign of the stripped factors at the value: (x - lo) > 0,
            // (x - hi) < 0.
            while (!H.empty() && detail::zsign_at(H, lo_) == 0)
                H = detail::zdivexact(H, detail::linear_of(lo_));
            while (!H.empty() && detail::zsign_at(H, hi_) == 0) {
                H = detail::zdivexact(H, detail::linear_of(hi_));
                flip = -flip;
            }
            if (detail::zdeg(H) <= 0) {
                const int s = H.empty() ? 0 : sgn(H[0]);
                return s * flip > 0 ? Sign::Positive : (s == 0 ? Sign::Zero : Sign::Negative);
            }
            if (detail::var01(detail::compose_affine(H, lo_, hi_)) == 0) {
                const int s = detail::zsign_at(H, lo_) * flip;
                return s > 0 ? Sign::Positive : Sign::Negative;
            }
            refine();
            if (is_rational()) return sign_of_rational(h.evaluate<Rational>(lo_));
        }
    }

    /// Exact a + b sqrt(D) form when the defining polynomial is quadratic
    /// and the square-free part of its discriminant can be extracted.
    std::optional<Quadratic> as_quadratic() const {
        if (is_rational()) return Quadratic(lo_);
        if (detail::zdeg(p_) != 2) return std::nullopt;
        const mpz_class &a = p_[2], &b = p_[1], &c = p_[0];
        mpz_class m = b * b - 4 * a * c;
        mpz_class s(1), D(1);
        mpz_class f(2);
        while (f * f <= m && f < 1000000) {
            int e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), f.get_mpz_t());
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) s *= f;
            if (e % 2) D *= f;
            if (f == 2)
                f = 3;
            else
                f += 2;
        }
        if (m > 1) {
            if (mpz_perfect_square_p(m.get_mpz_t())) {
                mpz_class r;
                mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
                s *= r;
            } else if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
                D *= m;
            } else {
                return std::nullopt; // cannot certify a square-free radicand
            }
        }
        if (!D.fits_ulong_p() || D == 1) return std::nullopt;
        const Rational base(-b, 2 * a), coef(s, 2 * a);
        for (int branch : {+1, -1}) {
            Quadratic cand(base, branch > 0 ? coef : -coef, D.get_ui());
            if ((cand - Quadratic(lo_)).signum() >= 0 && (Quadratic(hi_) - cand).signum() >= 0) {
                Quadratic acc(Rational(p_.back(), mpz_class(1)));
                for (int k = detail::zdeg(p_) - 1; k >= 0; --k)
                    acc = acc * cand + Quadratic(Rational(p_[size_t(k)], mpz_class(1)));
                if (!acc.is_zero())
                    throw std::logic_error("as_quadratic: candidate fails its own polynomial");
                return cand;
            }
        }
        return std::nullopt;
    }

    /// Decimal-friendly approximation for display only.
    double approx() const {
        refine_to_width(Rational(mpz_class(1), mpz_class(1) << 60));
        const Rational mid = (lo_ + hi_) / Rational(2);
        return mpq_get_d(mid.raw().get_mpq_t());
    }

    std::string to_string() const {
        if (is_rational()) return lo_.to_string();
        return "root of " + minimal_polynomial().to_string() + " in [" + lo_.to_string() +
               ", " + hi_.to_string() + "]";
    }

private:
    friend std::vector<IsolatedRoot> isolate_in(const DPoly&, const Rational&,
                                                const Rational&);

    AlgebraicNumber(detail::ZPoly p, const Rational& lo, const Rational& hi, int) {
        init_interval(std::move(p), lo, hi);
    }

    void init_interval(detail::ZPoly z, const Rational& lo, const Rational& hi) {
        if (!(lo < hi)) throw std::invalid_argument("AlgebraicNumber: need lo < hi");
        const int sl = detail::zsign_at(z, lo), sh = detail::zsign_at(z, hi);
        if (sl == 0 || sh == 0 || sl == sh)
            throw std::invalid_argument("AlgebraicNumber: interval must straddle a sign change");
        p_ = std::move(z);
        lo_ = lo;
        hi_ = hi;
        slo_ = sl;
    }

    void collapse(const Rational& v) const {
        p_ = detail::linear_of(v);
        lo_ = hi_ = v;
        slo_ = 0;
    }

    static Sign sign_of_rational(const Rational& v) {
        const int s = v.signum();
        return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
    }

    mutable detail::ZPoly p_;
    mutable Rational lo_{0}, hi_{0};
    mutable int slo_ = 0;
};

struct IsolatedRoot {
    AlgebraicNumber value;
    int multiplicity;
};

/// All real roots of p inside the open interval (lo, hi), sorted
/// ascending, with multiplicities. Exact: square-free decomposition, then
/// Descartes bisection per factor; rational roots are returned exactly and
/// their linear factors are stripped from the defining polynomial handed
/// to the irrational roots.
inline std::vector<IsolatedRoot> isolate_in(const DPoly& p, const Rational& lo,
                                            const Rational& hi) {
    if (p.degree() < 0) throw std::domain_error("isolate_in: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_in: need lo < hi");
    std::vector<IsolatedRoot> out;
    const detail::ZPoly zp = detail::from_dpoly(p);
    for (auto&& [f, mult] : detail::square_free_decomposition(zp)) {
        detail::ZPoly F = f;
        if (detail::zsign_at(F, lo) == 0) F = detail::zdivexact(F, detail::linear_of(lo));
        if (detail::zsign_at(F, hi) == 0) F = detail::zdivexact(F, detail::linear_of(hi));
        if (detail::zdeg(F) < 1) continue;
        const detail::Isolated01 iso = detail::isolate01(detail::compose_affine(F, lo, hi));
        const Rational span = hi - lo;
        std::vector<Rational> rats;
        for (const Rational& t : iso.rational_roots) rats.push_back(lo + span * t);
        std::vector<std::pair<Rational, Rational>> ints;
        for (const auto& [t1, t2] : iso.intervals) {
            const Rational x1 = lo + span * t1, x2 = lo + span * t2;
            if (auto r = detail::probe_rational_root(F, x1, x2))
                rats.push_back(*r);
            else
                ints.emplace_back(x1, x2);
        }
        detail::ZPoly Firr = F;
        for (const Rational& r : rats) Firr = detail::zdivexact(Firr, detail::linear_of(r));
        for (const Rational& r : rats) out.push_back({AlgebraicNumber(r), mult});
        for (const auto& [x1, x2] : ints)
            out.push_back({AlgebraicNumber(Firr, x1, x2, 0), mult});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) {
                  return a.value.compare(b.value) < 0;
              });
    return out;
}

/// All real roots of p, found inside (-B, B) for a power-of-two Cauchy
/// bound B computed per square-free factor.
inline std::vector<IsolatedRoot> isolate_real_roots(const DPoly& p) {
    if (p.degree() < 0) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    const detail::ZPoly zp = detail::from_dpoly(p);
    mpz_class maxc(0);
    for (const auto& c : zp) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    // smallest power of two B with |lead| * B >= 2 * maxc, so that
    // B >= 1 + maxc/|lead| strictly bounds every root magnitude
    mpz_class lead = abs(zp.back());
    unsigned long e = 1;
    while (lead << e < 2 * maxc) ++e;
    Rational B(mpz_class(1) << e, mpz_class(1));
    return isolate_in(p, -B, B);
}

} // namespace qborwein
