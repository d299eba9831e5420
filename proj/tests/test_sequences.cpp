#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stirconv/sequences.hpp"

using namespace stirconv;

namespace {

const MultiPoly X = MultiPoly::variable(Var::X);
const MultiPoly Y = MultiPoly::variable(Var::Y);
const MultiPoly L = MultiPoly::variable(Var::Lambda);
const MultiPoly Z = MultiPoly::variable(Var::Z);
const Rational half(1, 2);

} // namespace

TEST_CASE("first Q polynomials match their factored closed forms") {
    Sequences seq;
    CHECK(seq.q_recurrence(0) == MultiPoly(1));
    CHECK(seq.q_recurrence(1) == X * Y - L);

    // Q_2 = (xy/2)(1 - y + 2xy) - (lambda/2)(1 - lambda + 2xy)
    MultiPoly q2 = (X * Y).scaled(half) * (MultiPoly(1) - Y + (X * Y).scaled(Rational(2))) -
                   L.scaled(half) * (MultiPoly(1) - L + (X * Y).scaled(Rational(2)));
    CHECK(seq.q_recurrence(2) == q2);

    // Q_3 = (xy/6)(y-1)(y-2) - (lambda/6)(lambda-1)(lambda-2)
    //       - xy(1 - y + xy)(lambda - xy) + (lambda xy/2)(lambda - y)
    MultiPoly q3 = (X * Y).scaled(Rational(1, 6)) * (Y - MultiPoly(1)) * (Y - MultiPoly(2)) -
                   L.scaled(Rational(1, 6)) * (L - MultiPoly(1)) * (L - MultiPoly(2)) -
                   X * Y * (MultiPoly(1) - Y + X * Y) * (L - X * Y) +
                   (L * X * Y).scaled(half) * (L - Y);
    CHECK(seq.q_recurrence(3) == q3);
}

TEST_CASE("all four Q routes agree") {
    Sequences seq;
    for (int n = 0; n <= 8; ++n) {
        const MultiPoly &ref = seq.q_recurrence(n);
        CHECK(seq.q_double_sum(n) == ref);
        CHECK(seq.q_triple_sum(n) == ref);
        CHECK(seq.q_from_series(n) == ref);
        for (Route r : {Route::Recurrence, Route::DoubleSum, Route::TripleSum, Route::Series})
            CHECK(seq.q_by_route(r, n) == ref);
    }
}

TEST_CASE("Q specializations with known closed values") {
    Sequences seq;
    // At y = 1, lambda = 0 the generating function is 1/(1 - x tau), so
    // Q_n = x^n; in particular Q_n(1, 1, 0) = 1.
    for (int n = 0; n <= 8; ++n) {
        MultiPoly xn(1);
        for (int i = 0; i < n; ++i)
            xn = xn * X;
        CHECK(seq.q_recurrence(n)
                  .substitute(Var::Y, MultiPoly(1))
                  .substitute(Var::Lambda, MultiPoly()) == xn);
        CHECK(seq.q_recurrence(n).eval({{Var::X, Rational(1)},
                                        {Var::Y, Rational(1)},
                                        {Var::Lambda, Rational(0)}}) == Rational(1));
    }
    CHECK(seq.q_recurrence(2).degree(Var::Lambda) == 2);
}

TEST_CASE("Q leading term is x^n y^n") {
    Sequences seq;
    for (int n = 1; n <= 8; ++n) {
        const MultiPoly &q = seq.q_recurrence(n);
        CHECK(q.degree(Var::X) == n);
        Monomial lead = q.terms().begin()->first; // canonical order: leading first
        CHECK(lead[Var::X] == n);
        CHECK(lead[Var::Y] == n);
        CHECK(lead[Var::Lambda] == 0);
        CHECK(q.terms().begin()->second == Rational(1));
    }
}

TEST_CASE("first P polynomials") {
    Sequences seq;
    CHECK(seq.p_recurrence(1) == X);
    CHECK(seq.p_recurrence(2) == X * (MultiPoly(1) + Z) - (X * X * Z));
    CHECK_THROWS_AS(seq.p_recurrence(0), std::domain_error);
    CHECK_THROWS_AS(seq.p_double_sum(0), std::domain_error);
}

TEST_CASE("both P routes agree") {
    Sequences seq;
    for (int n = 1; n <= 8; ++n)
        CHECK(seq.p_double_sum(n) == seq.p_recurrence(n));
}

TEST_CASE("Q specializes to P under lambda = -1-z, y = -z") {
    Sequences seq;
    // Q_1 = xy - lambda becomes -xz + 1 + z, which is P_2 / x.
    MultiPoly q1_spec = seq.q_recurrence(1)
                            .substitute(Var::Lambda, MultiPoly(-1) - Z)
                            .substitute(Var::Y, -Z);
    CHECK(q1_spec == -(X * Z) + MultiPoly(1) + Z);
    CHECK(X * q1_spec == seq.p_recurrence(2));
    for (int n = 0; n <= 8; ++n) {
        CHECK(seq.q_reduces_to_p(n));
        // Same fact spelled out, so a vacuous q_reduces_to_p would be caught.
        MultiPoly specialized = seq.q_recurrence(n)
                                    .substitute(Var::Lambda, -(Z + MultiPoly(1)))
                                    .substitute(Var::Y, -Z);
        CHECK(X * specialized == seq.p_recurrence(n + 1));
    }
}

TEST_CASE("route helpers") {
    CHECK(route_from_name("recurrence") == Route::Recurrence);
    CHECK(route_from_name("double-sum") == Route::DoubleSum);
    CHECK(route_from_name("triple-sum") == Route::TripleSum);
    CHECK(route_from_name("series") == Route::Series);
    CHECK_FALSE(route_from_name("simpson").has_value());
    CHECK(route_name(Route::TripleSum) == std::string("triple-sum"));
}

TEST_CASE("numeric single sum converges to the exact value") {
    Sequences seq;
    for (int n = 0; n <= 4; ++n) {
        double exact = seq.q_recurrence(n)
                           .eval({{Var::X, Rational(1, 4)},
                                  {Var::Y, Rational(2)},
                                  {Var::Lambda, half}})
                           .to_double();
        SingleSumResult r =
            q_single_sum_numeric(n, Rational(1, 4), Rational(2), half, 1e-12, 100000);
        double scale = std::max(1.0, std::abs(exact));
        CHECK(std::abs(r.value - exact) / scale < 1e-9);
        CHECK(r.terms_used > 0);
    }
    // Negative x converges as well (alternating geometric factor).
    double exact = seq.q_recurrence(3)
                       .eval({{Var::X, Rational(-1, 2)},
                              {Var::Y, Rational(3)},
                              {Var::Lambda, Rational(-3, 2)}})
                       .to_double();
    SingleSumResult r =
        q_single_sum_numeric(3, Rational(-1, 2), Rational(3), Rational(-3, 2), 1e-12, 100000);
    CHECK(std::abs(r.value - exact) / std::max(1.0, std::abs(exact)) < 1e-9);
}

TEST_CASE("numeric single sum survives exactly-zero leading terms") {
    // With integer lambda and y the binomial factor vanishes for every
    // k < n, so a naive small-term stop would return 0 instead of the true
    // value Q_n(x, 1, 0) = x^n.
    Sequences seq;
    for (int n = 1; n <= 6; ++n) {
        double exact = seq.q_recurrence(n)
                           .eval({{Var::X, Rational(-1, 2)},
                                  {Var::Y, Rational(1)},
                                  {Var::Lambda, Rational(0)}})
                           .to_double();
        SingleSumResult r = q_single_sum_numeric(n, Rational(-1, 2), Rational(1),
                                                 Rational(0), 1e-12, 100000);
        CHECK(std::abs(r.value - exact) / std::max(1.0, std::abs(exact)) < 1e-9);
        CHECK(r.terms_used > n); // must not stop inside the zero prefix
    }
}

TEST_CASE("numeric single sum rejects the divergent regime") {
    CHECK_THROWS_AS(q_single_sum_numeric(1, Rational(1, 2), Rational(1), Rational(0), 1e-12,
                                         1000),
                    std::domain_error);
    CHECK_THROWS_AS(q_single_sum_numeric(1, Rational(3, 4), Rational(1), Rational(0), 1e-12,
                                         1000),
                    std::domain_error);
    CHECK_THROWS_AS(q_single_sum_numeric(1, Rational(1, 4), Rational(1), Rational(0), -1.0,
                                         1000),
                    std::domain_error);
    CHECK_THROWS_AS(q_single_sum_numeric(1, Rational(1, 4), Rational(1), Rational(0), 1e-12,
                                         0),
                    std::domain_error);
}

TEST_CASE("exhausted term budget reports the partial sum") {
    try {
        q_single_sum_numeric(2, Rational(49, 100), Rational(2), Rational(1), 1e-12, 5);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError &e) {
        CHECK(e.terms_used == 5);
        CHECK(std::isfinite(e.partial_sum));
        CHECK(std::string(e.what()).find("5 terms") != std::string::npos);
    }
}
