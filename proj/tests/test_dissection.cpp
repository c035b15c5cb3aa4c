#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qborwein/dissection.hpp"

using qborwein::borwein_dissect;
using qborwein::Dissection3;
using qborwein::Rational;
using qborwein::Series;
using qborwein::VerifyStatus;

TEST_CASE("dissection is index bookkeeping with signs") {
    // f = 1 + 2q + 3q^2 + 4q^3 + 5q^4 + 6q^5
    const Series<Rational> f({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                              Rational(6)});
    const auto parts = dissect(f, 3, {+1, -1, -1});
    REQUIRE(parts[0] == Series<Rational>({Rational(1), Rational(4)}));
    REQUIRE(parts[1] == Series<Rational>({Rational(-2), Rational(-5)}));
    REQUIRE(parts[2] == Series<Rational>({Rational(-3), Rational(-6)}));

    // m = 1 with sign + is the identity
    REQUIRE(dissect(f, 1, {+1})[0] == f);

    REQUIRE_THROWS_AS(dissect(f, 0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(dissect(f, 2, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(dissect(f, 2, {1, 2}), std::invalid_argument);
}

TEST_CASE("component orders follow floor((N - r) / 3)") {
    const Series<Rational> f(7);
    const auto parts = dissect(f, 3, {+1, -1, -1});
    REQUIRE(parts[0].order() == 2);
    REQUIRE(parts[1].order() == 2);
    REQUIRE(parts[2].order() == 1);
    // a residue beyond the truncation degenerates to the order-0 zero series
    const auto tiny = dissect(Series<Rational>(1), 3, {+1, -1, -1});
    REQUIRE(tiny[2].order() == 0);
    REQUIRE(tiny[2].is_zero());
}

TEST_CASE("borwein dissection of the first finite stages") {
    // n = 1: 1 - q - q^2 + q^3 gives A = 1 + q, B = 1, C = 1
    const auto d1 = borwein_dissect(qborwein::borwein_product_finite(1, 3));
    REQUIRE(d1.A == Series<Rational>({Rational(1), Rational(1)}));
    REQUIRE(d1.B == Series<Rational>({Rational(1)}));
    REQUIRE(d1.C == Series<Rational>({Rational(1)}));

    // n = 2 at full degree 12
    const auto d2 = borwein_dissect(qborwein::borwein_product_finite(2, 12));
    REQUIRE(d2.A == Series<Rational>({Rational(1), Rational(1), Rational(2), Rational(1),
                                      Rational(1)}));
    REQUIRE(d2.B == Series<Rational>({Rational(1), Rational(1), Rational(0), Rational(1)}));
    REQUIRE(d2.C == Series<Rational>({Rational(1), Rational(0), Rational(1), Rational(1)}));

    // squared n = 1: 1 - 2q - q^2 + 4q^3 - q^4 - 2q^5 + q^6
    const auto s1 = borwein_dissect(qborwein::borwein_product_squared_finite(1, 6));
    REQUIRE(s1.A == Series<Rational>({Rational(1), Rational(4), Rational(1)}));
    REQUIRE(s1.B == Series<Rational>({Rational(2), Rational(1)}));
    REQUIRE(s1.C == Series<Rational>({Rational(1), Rational(2)}));
}

TEST_CASE("dissection reassembles its input exactly") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 50; ++rep) {
        const int N = 1 + int(rng() % 40);
        const auto f = oracle::random_series(rng, N, false);
        REQUIRE(reassemble(borwein_dissect(f), N) == f);
    }
}

TEST_CASE("dissection is linear") {
    std::mt19937_64 rng(321);
    const auto f = oracle::random_series(rng, 17, false);
    const auto g = oracle::random_series(rng, 17, false);
    const auto df = borwein_dissect(f), dg = borwein_dissect(g), dfg = borwein_dissect(f + g);
    REQUIRE(dfg.A == df.A + dg.A);
    REQUIRE(dfg.B == df.B + dg.B);
    REQUIRE(dfg.C == df.C + dg.C);
}

TEST_CASE("nonnegativity verdicts") {
    // the zero series is vacuously verified
    const auto zero = qborwein::verify_nonnegative(borwein_dissect(Series<Rational>(9)),
                                                   qborwein::json{}, 9);
    REQUIRE(zero.status == VerifyStatus::Verified);
    REQUIRE(zero.exit_code() == 0);

    // d = 1 over a long range is the classic nonnegative dissection
    const auto one = qborwein::verify_fractional(Rational(1), 200);
    REQUIRE(one.status == VerifyStatus::Verified);

    // below the critical exponent the q^3 coefficient turns negative: A_1
    const auto bad = qborwein::verify_fractional(Rational(1, 5), 10);
    REQUIRE(bad.status == VerifyStatus::Violation);
    REQUIRE(bad.exit_code() == 1);
    REQUIRE(bad.components[0].name == "A");
    REQUIRE(bad.components[0].first_violation == 1);
    REQUIRE(bad.components[0].witness == qborwein::json("-1/125"));
    REQUIRE(bad.components[1].first_violation == -1);
    REQUIRE(bad.components[2].first_violation == -1);

    // a violation found at some order persists at every larger order
    for (int N : {3, 6, 9, 30}) {
        const auto rep = qborwein::verify_fractional(Rational(1, 5), N);
        REQUIRE(rep.status == VerifyStatus::Violation);
        REQUIRE(rep.components[0].first_violation == 1);
    }
}

TEST_CASE("finite stage verification") {
    for (int n = 0; n <= 8; ++n) {
        const auto rep = qborwein::verify_finite_borwein(n, false);
        REQUIRE(rep.status == VerifyStatus::Verified);
        REQUIRE(rep.checked_order == 3 * n * n);
    }
    const auto rep0 = qborwein::verify_finite_borwein(0, false);
    REQUIRE(rep0.checked_order == 0);
    for (int n = 0; n <= 5; ++n)
        REQUIRE(qborwein::verify_finite_borwein(n, true).status == VerifyStatus::Verified);
}

TEST_CASE("interval verification certifies or stays honest") {
    const auto good = qborwein::verify_fractional_interval(Rational(1, 2), 40);
    REQUIRE(good.status == VerifyStatus::Verified);
    REQUIRE(good.ring == "interval");

    const auto negative = qborwein::verify_fractional_interval(Rational(1, 5), 10);
    REQUIRE(negative.status == VerifyStatus::Violation);
    REQUIRE(negative.components[0].first_violation == 1);

    // at the critical exponent the q^3 coefficient is exactly zero, which an
    // outward-rounded enclosure can never certify: inconclusive, not verified
    const qborwein::Quadratic crit(Rational(9, 2), Rational(-1, 2), 73);
    const auto edge = qborwein::verify_fractional_interval(crit, 6);
    REQUIRE(edge.status == VerifyStatus::Inconclusive);
    REQUIRE(edge.exit_code() == 2);
}

TEST_CASE("report JSON matches the published schema") {
    const auto rep = qborwein::verify_fractional(Rational(1, 5), 10);
    const auto j = rep.to_json();
    REQUIRE(j.at("version") == 1);
    REQUIRE(j.at("status") == "violation");
    REQUIRE(j.at("checked_order") == 10);
    REQUIRE(j.at("ring") == "rational");
    REQUIRE(j.at("components").at("A").at("first_violation") == 1);
    REQUIRE(j.at("components").at("A").at("witness") == "-1/125");
    REQUIRE(j.at("components").at("B").at("first_violation").is_null());
    REQUIRE(j.at("components").at("B").at("witness").is_null());

    const auto ok = qborwein::verify_fractional(Rational(1), 5);
    REQUIRE(ok.to_json().at("status") == "verified-nonnegative");
}
