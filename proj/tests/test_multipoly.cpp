#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "stirconv/multipoly.hpp"

using stirconv::Monomial;
using stirconv::MultiPoly;
using stirconv::Rational;
using stirconv::Var;

namespace {

const MultiPoly X = MultiPoly::variable(Var::X);
const MultiPoly Y = MultiPoly::variable(Var::Y);
const MultiPoly L = MultiPoly::variable(Var::Lambda);
const MultiPoly Z = MultiPoly::variable(Var::Z);

MultiPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> nterms(1, 6);
    MultiPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        m[Var::X] = expo(rng);
        m[Var::Y] = expo(rng);
        m[Var::Lambda] = expo(rng);
        m[Var::Z] = expo(rng);
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

std::map<Var, Rational> random_point(std::mt19937 &rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    return {{Var::X, Rational(num(rng), den(rng))},
            {Var::Y, Rational(num(rng), den(rng))},
            {Var::Lambda, Rational(num(rng), den(rng))},
            {Var::Z, Rational(num(rng), den(rng))}};
}

} // namespace

TEST_CASE("canonical text serialization") {
    CHECK((X * Y - L).to_string() == "x*y - λ");
    CHECK((X * Y - L).to_string(true) == "x*y - L");
    CHECK(MultiPoly().to_string() == "0");
    CHECK(MultiPoly(Rational(-3, 2)).to_string() == "-3/2");
    CHECK(X.to_string() == "x");
    CHECK((-X).to_string() == "-x");
    CHECK((X - Y).to_string() == "x - y");
    CHECK((-X + MultiPoly(1)).to_string() == "-x + 1");
    CHECK(((X + Y) * (X + Y)).to_string() == "x^2 + 2*x*y + y^2");
    CHECK((X.scaled(Rational(1, 2)) + Z.scaled(Rational(-2, 3))).to_string() ==
          "1/2*x - 2/3*z");
    // Unit coefficient elided on a product, kept on a bare constant.
    CHECK((X * Y * Z).to_string() == "x*y*z");
    CHECK(MultiPoly(1).to_string() == "1");
    CHECK(MultiPoly(-1).to_string() == "-1");
    // Exponent 1 elided, >= 2 spelled with '^'.
    CHECK((X * X * Y).to_string() == "x^2*y");
    CHECK((L * L * L).to_string() == "λ^3");
}

TEST_CASE("term order is graded lexicographic, x > y > lambda > z") {
    // Same total degree: lexicographic on the exponent vector.
    MultiPoly p = Y * Y + X * Z + L * Y;
    CHECK(p.to_string() == "x*z + y^2 + y*λ");
    // Different total degree: higher degree first.
    MultiPoly q = X + Y * Y * Y + MultiPoly(5);
    CHECK(q.to_string() == "y^3 + x + 5");
}

TEST_CASE("zero coefficients are never stored") {
    MultiPoly p = X * Y;
    p.add_term(Monomial{{1, 1, 0, 0}}, Rational(-1));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK((X - X) == MultiPoly());
    CHECK(((X + Y) - Y - X).is_zero());
}

TEST_CASE("arithmetic matches evaluation homomorphism") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = random_poly(rng);
        MultiPoly q = random_poly(rng);
        auto pt = random_point(rng);
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        CHECK((p - q).eval(pt) == p.eval(pt) - q.eval(pt));
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((-p).eval(pt) == -p.eval(pt));
        CHECK(p.scaled(Rational(3, 7)).eval(pt) == p.eval(pt) * Rational(3, 7));
    }
}

TEST_CASE("ring identities") {
    CHECK((X + Y) * (X - Y) == X * X - Y * Y);
    CHECK((X * Y - L) * (X * Y + L) == X * X * Y * Y - L * L);
    CHECK((X + L) + (-L) == X);
    CHECK((X * Y - L).scaled(Rational(0)).is_zero());
    MultiPoly cube = (X + Y) * (X + Y) * (X + Y);
    MultiPoly expanded =
        X * X * X + (X * X * Y).scaled(3) + (X * Y * Y).scaled(3) + Y * Y * Y;
    CHECK(cube == expanded);
    CHECK(MultiPoly() * (X + L) == MultiPoly());
    CHECK(MultiPoly(1) * (X + L) == X + L);
}

TEST_CASE("degrees") {
    MultiPoly p = X * X * Y - Z;
    CHECK(p.degree(Var::X) == 2);
    CHECK(p.degree(Var::Y) == 1);
    CHECK(p.degree(Var::Lambda) == 0);
    CHECK(p.degree(Var::Z) == 1);
    CHECK(p.total_degree() == 3);
    CHECK(MultiPoly().degree(Var::X) == -1);
    CHECK(MultiPoly().total_degree() == -1);
    CHECK(MultiPoly(4).total_degree() == 0);
}

TEST_CASE("evaluation") {
    MultiPoly p = X * Y - L; // 2*3 - 1 = 5
    CHECK(p.eval({{Var::X, Rational(2)}, {Var::Y, Rational(3)}, {Var::Lambda, Rational(1)}}) ==
          Rational(5));
    // Extra bindings are fine; missing ones are an error naming the variable.
    CHECK(p.eval({{Var::X, Rational(0)},
                  {Var::Y, Rational(9)},
                  {Var::Lambda, Rational(1, 3)},
                  {Var::Z, Rational(5)}}) == Rational(-1, 3));
    CHECK_THROWS_WITH_AS(p.eval({{Var::X, Rational(1)}, {Var::Lambda, Rational(1)}}),
                         "unbound variable y", std::invalid_argument);
    // The zero polynomial needs no bindings at all.
    CHECK(MultiPoly().eval({}) == Rational(0));
}

TEST_CASE("substitution agrees with evaluation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = random_poly(rng);
        MultiPoly q = random_poly(rng);
        auto pt = random_point(rng);
        for (Var v : {Var::X, Var::Y, Var::Lambda, Var::Z}) {
            auto shifted = pt;
            shifted[v] = q.eval(pt);
            CHECK(p.substitute(v, q).eval(pt) == p.eval(shifted));
        }
    }
}

TEST_CASE("substituting a constant specializes the polynomial") {
    MultiPoly p = X * Y - L;
    CHECK(p.substitute(Var::Lambda, MultiPoly(-1) - Z) == X * Y + MultiPoly(1) + Z);
    CHECK(p.substitute(Var::Y, MultiPoly(1)) == X - L);
    CHECK(p.substitute(Var::Lambda, MultiPoly()) == X * Y);
    CHECK(p.substitute(Var::Y, MultiPoly(Rational(1, 2))) == X.scaled(Rational(1, 2)) - L);
    // Substituting a variable that does not occur is the identity.
    CHECK(p.substitute(Var::Z, Y + L) == p);
}

TEST_CASE("equality is structural on canonical form") {
    CHECK(X * Y == Y * X);
    CHECK(X + X == X.scaled(Rational(2)));
    CHECK_FALSE(X == Y);
    CHECK_FALSE(X + MultiPoly(1) == X);
}
