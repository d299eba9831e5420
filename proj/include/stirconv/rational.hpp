#ifndef STIRCONV_RATIONAL_HPP
#define STIRCONV_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirconv {

/// Unbounded signed integer. Backs every exact computation in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over BigInt, kept in canonical form at all times:
/// gcd(|num|, den) == 1, den > 0, and zero is always 0/1. Equality is
/// structural equality of the canonical form, so Rational can serve as a
/// coefficient type for polynomials compared term by term.
///
/// All operations are pure; values are immutable after construction and
/// safe to share across threads.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt &n) : num_(n), den_(1) {}

    /// Throws std::domain_error("division by zero") when den == 0.
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt &numerator() const { return num_; }
    const BigInt &denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    /// Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Reciprocal; throws std::domain_error on zero.
    Rational inverse() const;

    /// Integer power; negative exponents invert (zero base -> domain_error).
    Rational pow(int e) const;

    /// Nearest binary64 value. Magnitudes beyond the double range raise
    /// std::overflow_error instead of returning an infinity.
    double to_double() const;

    /// "p" or "p/q" in lowest terms.
    std::string to_string() const;

    /// Parses "p" or "p/q" with optional leading sign on p and an unsigned
    /// positive q. Anything else (decimals in particular) raises
    /// std::invalid_argument; q == 0 raises std::domain_error.
    static Rational from_string(std::string_view s);

  private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

} // namespace stirconv

#endif
