#ifndef STIRCONV_MULTIPOLY_HPP
#define STIRCONV_MULTIPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "stirconv/rational.hpp"

namespace stirconv {

/// The ring has exactly four indeterminates. The declaration order is also
/// the significance order for the canonical term ordering.
enum class Var : int { X = 0, Y = 1, Lambda = 2, Z = 3 };

inline constexpr int kNumVars = 4;

/// Display name; `ascii` renders Lambda as "L" instead of the UTF-8 letter.
const char *var_name(Var v, bool ascii = false);

/// Exponent vector over {x, y, lambda, z}.
struct Monomial {
    std::array<int, kNumVars> exp{};

    int operator[](Var v) const { return exp[static_cast<int>(v)]; }
    int &operator[](Var v) { return exp[static_cast<int>(v)]; }

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// Graded lexicographic order (x > y > lambda > z), descending: the map
/// iterates from the leading term, which fixes the canonical serialization.
struct TermOrder {
    bool operator()(const Monomial &a, const Monomial &b) const {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da > db;
        return a.exp > b.exp;
    }
};

/// Sparse polynomial in Q[x, y, lambda, z]. Invariant: no stored coefficient
/// is zero, so equality of polynomials is equality of term maps.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, TermOrder>;

    MultiPoly() = default;
    MultiPoly(const Rational &c) { add_term(Monomial{}, c); }
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}

    static MultiPoly constant(const Rational &c) { return MultiPoly(c); }
    static MultiPoly variable(Var v);
    /// Single term c * x^e0 y^e1 lambda^e2 z^e3.
    static MultiPoly term(const Rational &c, const Monomial &m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap &terms() const { return terms_; }

    /// Adds c to the coefficient of m, dropping the term if it cancels.
    void add_term(const Monomial &m, const Rational &c);

    /// Max exponent of v; -1 for the zero polynomial.
    int degree(Var v) const;
    /// Max total degree; -1 for the zero polynomial.
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);

    MultiPoly scaled(const Rational &c) const;
    friend MultiPoly operator*(const MultiPoly &a, const Rational &c) { return a.scaled(c); }
    friend MultiPoly operator*(const Rational &c, const MultiPoly &a) { return a.scaled(c); }

    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

    /// Exact evaluation. Every variable occurring in the polynomial must be
    /// bound; a missing binding raises std::invalid_argument naming it.
    Rational eval(const std::map<Var, Rational> &assignment) const;

    /// Replaces v by the polynomial q, exactly.
    MultiPoly substitute(Var v, const MultiPoly &q) const;

    /// Canonical text: terms in graded-lex descending order, factors joined
    /// with '*', unit exponents and unit coefficients elided. Deterministic
    /// across runs; the zero polynomial prints "0".
    std::string to_string(bool ascii = false) const;

  private:
    TermMap terms_;
};

} // namespace stirconv

#endif
