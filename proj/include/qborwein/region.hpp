#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qborwein/dpoly.hpp"
#include "qborwein/qproducts.hpp"
#include "qborwein/roots.hpp"
#include "qborwein/serialize.hpp"
#include "qborwein/series.hpp"

namespace qborwein {

/// Coefficients of (q, q^2; q^3)_inf^d with d left formal: coefficient of
/// q^t is a degree-t polynomial in d.
inline Series<DPoly> formal_coefficient_polys(int N) {
    return borwein_product_fractional(DPoly::variable(), N);
}

inline DPoly coefficient_polynomial(int t, int N) {
    if (t < 0 || t > N) throw std::invalid_argument("coefficient_polynomial: need 0 <= t <= N");
    return formal_coefficient_polys(N)[t];
}

/// p_t(d) >= 0 is the nonnegativity constraint at index t: the dissection
/// negates residues 1 and 2 mod 3, so those coefficient polynomials flip
/// sign.
inline DPoly sign_adjusted_constraint(int t, const Series<DPoly>& polys) {
    if (t < 1 || t > polys.order())
        throw std::invalid_argument("sign_adjusted_constraint: t out of range");
    return t % 3 == 0 ? polys[t] : -polys[t];
}

inline DPoly sign_adjusted_constraint(int t, int N) {
    return sign_adjusted_constraint(t, formal_coefficient_polys(N));
}

/// Closure of {d in [domain_lo, domain_hi] : p_t(d) >= 0 for all t <= N},
/// as exact closed intervals with algebraic endpoints. binding maps each
/// interval endpoint (key "<i>.lo" / "<i>.hi") to the constraint indices
/// vanishing there.
struct FeasibleRegion {
    int constraint_order = 0;
    Rational domain_lo{0}, domain_hi{0};
    std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> intervals;
    std::map<std::string, std::vector<int>> binding;

    bool contains(const Rational& d) const {
        for (const auto& [lo, hi] : intervals)
            if (lo.compare_rational(d) <= 0 && hi.compare_rational(d) >= 0) return true;
        return false;
    }

    json to_json() const {
        json ivs = json::array();
        for (const auto& [lo, hi] : intervals)
            ivs.push_back(json{{"lo", endpoint_json(lo)}, {"hi", endpoint_json(hi)}});
        json bind = json::object();
        for (const auto& [key, ts] : binding) bind[key] = ts;
        return json{{"version", 1},
                    {"constraint_order", constraint_order},
                    {"domain", {domain_lo.to_string(), domain_hi.to_string()}},
                    {"intervals", ivs},
                    {"binding", bind}};
    }

    static json endpoint_json(const AlgebraicNumber& x) {
        if (x.is_rational())
            return json{{"type", "rational"}, {"value", x.rational_value().to_string()}};
        json mp = json::array();
        const DPoly p = x.minimal_polynomial();
        for (int k = 0; k <= p.degree(); ++k) mp.push_back(p.coeff(k).to_string());
        return json{{"type", "algebraic"},
                    {"minpoly", mp},
                    {"interval", {x.lower().to_string(), x.upper().to_string()}}};
    }
};

/// A rational strictly between two exact values, obtained by refining both
/// until their isolating intervals separate.
inline Rational rational_between(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    while (!(x.upper() < y.lower())) {
        x.refine();
        y.refine();
    }
    return detail::simplest_rational_between(x.upper(), y.lower());
}

/// Sweep: collect every constraint root in the open domain as a breakpoint,
/// sort, sample one exact rational per cell, and keep the closure of the
/// union of feasible cells. Samples avoid all roots, so every constraint
/// has a strict sign at a sample, making cell feasibility exact.
inline FeasibleRegion feasible_region(int N, const Rational& domain_lo = Rational(0),
                                      const Rational& domain_hi = Rational(4)) {
    if (N < 1) throw std::invalid_argument("feasible_region: need N >= 1");
    if (!(domain_lo < domain_hi)) throw std::invalid_argument("feasible_region: empty domain");
    const Series<DPoly> polys = formal_coefficient_polys(N);
    std::vector<DPoly> constraints;
    constraints.reserve(size_t(N));
    for (int t = 1; t <= N; ++t) constraints.push_back(sign_adjusted_constraint(t, polys));

    std::vector<AlgebraicNumber> breaks{AlgebraicNumber(domain_lo), AlgebraicNumber(domain_hi)};
    for (const DPoly& c : constraints)
        for (const IsolatedRoot& r : isolate_in(c, domain_lo, domain_hi))
            breaks.push_back(r.value);
    std::sort(breaks.begin(), breaks.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.compare(b) < 0; });
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                                 return a.compare(b) == 0;
                             }),
                 breaks.end());

    std::vector<bool> feasible;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rational sample = rational_between(breaks[i], breaks[i + 1]);
        bool ok = true;
        for (const DPoly& c : constraints)
            if (c.evaluate<Rational>(sample).signum() < 0) {
                ok = false;
                break;
            }
        feasible.push_back(ok);
    }

    FeasibleRegion region;
    region.constraint_order = N;
    region.domain_lo = domain_lo;
    region.domain_hi = domain_hi;
    for (size_t i = 0; i < feasible.size();) {
        if (!feasible[i]) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < feasible.size() && feasible[j]) ++j;
        region.intervals.emplace_back(breaks[i], breaks[j]);
        i = j;
    }
    for (size_t i = 0; i < region.intervals.size(); ++i) {
        const auto& [lo, hi] = region.intervals[i];
        std::vector<int> blo, bhi;
        for (int t = 1; t <= N; ++t) {
            if (lo.sign_at(constraints[size_t(t) - 1]) == Sign::Zero) blo.push_back(t);
            if (hi.sign_at(constraints[size_t(t) - 1]) == Sign::Zero) bhi.push_back(t);
        }
        region.binding[std::to_string(i) + ".lo"] = std::move(blo);
        region.binding[std::to_string(i) + ".hi"] = std::move(bhi);
    }
    return region;
}

/// Constraint indices t <= N that vanish at a region endpoint. The point
/// must be an endpoint of feasible_region(N) over the same domain.
inline std::vector<int> binding_constraints(int N, const AlgebraicNumber& boundary,
                                            const Rational& domain_lo = Rational(0),
                                            const Rational& domain_hi = Rational(4)) {
    const FeasibleRegion region = feasible_region(N, domain_lo, domain_hi);
    const Series<DPoly> polys = formal_coefficient_polys(N);
    for (const auto& [lo, hi] : region.intervals) {
        if (boundary.compare(lo) != 0 && boundary.compare(hi) != 0) continue;
        std::vector<int> out;
        for (int t = 1; t <= N; ++t)
            if (boundary.sign_at(sign_adjusted_constraint(t, polys)) == Sign::Zero)
                out.push_back(t);
        return out;
    }
    throw std::invalid_argument("binding_constraints: boundary is not a region endpoint");
}

} // namespace qborwein
