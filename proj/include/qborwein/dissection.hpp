#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qborwein/interval.hpp"
#include "qborwein/qproducts.hpp"
#include "qborwein/serialize.hpp"
#include "qborwein/series.hpp"

namespace qborwein {

/// m-dissection with per-residue signs: component r holds
/// signs[r] * c_{mk+r} at index k, truncated at floor((N-r)/m). A component
/// whose residue exceeds N carries no data and degenerates to the order-0
/// zero series.
template <CoefficientRing R>
std::vector<Series<R>> dissect(const Series<R>& f, int m, const std::vector<int>& signs) {
    if (m < 1) throw std::invalid_argument("dissect: m must be >= 1");
    if (int(signs.size()) != m) throw std::invalid_argument("dissect: need one sign per residue");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("dissect: signs must be +-1");
    std::vector<Series<R>> out;
    out.reserve(size_t(m));
    for (int r = 0; r < m; ++r) {
        Series<R> comp(std::max((f.order() - r) / m, 0));
        for (int k = 0; m * k + r <= f.order(); ++k)
            comp.at(k) = (signs[size_t(r)] > 0) ? f[m * k + r] : -f[m * k + r];
        out.push_back(std::move(comp));
    }
    return out;
}

/// The 3-dissection f = A(q^3) - q B(q^3) - q^2 C(q^3): signs (+,-,-) so
/// that the conjectured nonnegativity is coefficient-wise on A, B, C.
template <CoefficientRing R>
struct Dissection3 {
    Series<R> A, B, C;
};

template <CoefficientRing R>
Dissection3<R> borwein_dissect(const Series<R>& f) {
    auto v = dissect(f, 3, {+1, -1, -1});
    return Dissection3<R>{std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

/// Inverse of borwein_dissect up to truncation at N.
template <CoefficientRing R>
Series<R> reassemble(const Dissection3<R>& dis, int N) {
    Series<R> f(N);
    for (int k = 0; k <= dis.A.order() && 3 * k <= N; ++k) f.at(3 * k) = dis.A[k];
    for (int k = 0; k <= dis.B.order() && 3 * k + 1 <= N; ++k) f.at(3 * k + 1) = -dis.B[k];
    for (int k = 0; k <= dis.C.order() && 3 * k + 2 <= N; ++k) f.at(3 * k + 2) = -dis.C[k];
    return f;
}

enum class VerifyStatus { Verified, Violation, Inconclusive };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "verified-nonnegative";
        case VerifyStatus::Violation: return "violation";
        case VerifyStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct ComponentResult {
    std::string name;
    int first_violation = -1; // smallest index with a certainly negative coefficient
    int first_unknown = -1;   // smallest index whose sign could not be certified
    json witness = nullptr;   // the offending (or uncertifiable) coefficient

    json to_json() const {
        json j;
        j["first_violation"] = first_violation >= 0 ? json(first_violation) : json(nullptr);
        j["witness"] = witness;
        if (first_unknown >= 0) j["first_unknown"] = first_unknown;
        return j;
    }
};

struct VerificationReport {
    VerifyStatus status = VerifyStatus::Verified;
    json params;
    int checked_order = 0;
    std::string ring;
    std::vector<ComponentResult> components;

    json to_json() const {
        json comps;
        for (const auto& c : components) comps[c.name] = c.to_json();
        return json{{"version", 1},
                    {"status", to_string(status)},
                    {"params", params},
                    {"checked_order", checked_order},
                    {"ring", ring},
                    {"components", comps}};
    }

    // 0 all certified, 1 certified violation, 2 could not decide.
    int exit_code() const {
        switch (status) {
            case VerifyStatus::Verified: return 0;
            case VerifyStatus::Violation: return 1;
            case VerifyStatus::Inconclusive: return 2;
        }
        return 2;
    }
};

template <CoefficientRing R>
ComponentResult check_component(const std::string& name, const Series<R>& comp) {
    ComponentResult res;
    res.name = name;
    for (int k = 0; k <= comp.order(); ++k) {
        switch (nonneg_status(comp[k])) {
            case NonnegStatus::Ok:
                break;
            case NonnegStatus::Negative:
                if (res.first_violation < 0) {
                    res.first_violation = k;
                    res.witness = coeff_to_json(comp[k]);
                }
                break;
            case NonnegStatus::Unknown:
                if (res.first_unknown >= 0) break;
                res.first_unknown = k;
                if (res.first_violation < 0) res.witness = coeff_to_json(comp[k]);
                break;
        }
        if (res.first_violation >= 0) break; // a certified violation is final
    }
    return res;
}

/// Certify every A, B, C coefficient nonnegative. A certified negative
/// anywhere wins over an earlier undecided coefficient only if it is found
/// first; scanning stops at the first certified violation per component.
template <CoefficientRing R>
VerificationReport verify_nonnegative(const Dissection3<R>& dis, json params, int checked_order) {
    VerificationReport rep;
    rep.params = std::move(params);
    rep.checked_order = checked_order;
    rep.ring = ring_traits<R>::name;
    rep.components.push_back(check_component("A", dis.A));
    rep.components.push_back(check_component("B", dis.B));
    rep.components.push_back(check_component("C", dis.C));
    bool violated = false, unknown = false;
    for (const auto& c : rep.components) {
        violated = violated || c.first_violation >= 0;
        unknown = unknown || c.first_unknown >= 0;
    }
    rep.status = violated    ? VerifyStatus::Violation
                 : unknown   ? VerifyStatus::Inconclusive
                             : VerifyStatus::Verified;
    return rep;
}

/// Finite-product checks at the natural full degree (3n^2, or 6n^2 for the
/// squared product), so the dissection sees the whole polynomial.
inline VerificationReport verify_finite_borwein(int n, bool squared = false) {
    const int N = (squared ? 6 : 3) * n * n;
    Series<Rational> f =
        squared ? borwein_product_squared_finite(n, N) : borwein_product_finite(n, N);
    json params{{"n", n}, {"squared", squared}, {"N", N}};
    return verify_nonnegative(borwein_dissect(f), std::move(params), N);
}

template <CoefficientRing R>
VerificationReport verify_fractional(const R& d, int N) {
    Series<R> f = borwein_product_fractional(d, N);
    json params{{"d", coeff_to_json(d)}, {"N", N}};
    return verify_nonnegative(borwein_dissect(f), std::move(params), N);
}

/// Interval-certified run for an exact exponent (Rational or Quadratic).
/// If the first pass cannot certify some coefficient, the precision is
/// doubled once (capped at 1024 bits) before conceding inconclusive.
template <typename E>
VerificationReport verify_fractional_interval(const E& d, int N, unsigned bits = 128) {
    auto run = [&](unsigned b) {
        Series<Interval> f = borwein_product_fractional_interval(d, N, b);
        json params{{"d", coeff_to_json(d)}, {"N", N}, {"bits", b}};
        return verify_nonnegative(borwein_dissect(f), std::move(params), N);
    };
    VerificationReport rep = run(bits);
    if (rep.status == VerifyStatus::Inconclusive && bits < 1024)
        rep = run(std::min(2 * bits, 1024u));
    return rep;
}

} // namespace qborwein
