#include "stirconv/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirconv {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw std::domain_error("division by zero");
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational &Rational::operator+=(const Rational &o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational &Rational::operator*=(const Rational &o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.num_ == 0)
        throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    // Denominators are positive, so cross multiplication preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0)
        throw std::domain_error("division by zero");
    return Rational(den_, num_);
}

Rational Rational::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    Rational r(1);
    Rational base = *this;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

double Rational::to_double() const {
    mp::cpp_rational q(num_, den_);
    double d = q.convert_to<double>();
    if (std::isinf(d))
        throw std::overflow_error("rational exceeds binary64 range: " + to_string());
    return d;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::from_string(std::string_view s) {
    auto malformed = [&] {
        return std::invalid_argument("malformed rational '" + std::string(s) +
                                     "' (expected p or p/q)");
    };
    std::string_view num_part = s;
    std::string_view den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        if (den_part.empty())
            throw malformed();
    }
    auto is_integer = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '+' || t.front() == '-'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    if (!is_integer(num_part, true))
        throw malformed();
    if (!den_part.empty() && !is_integer(den_part, false))
        throw malformed();
    if (num_part.front() == '+') // cpp_int's parser takes '-' but not '+'
        num_part.remove_prefix(1);
    BigInt num{std::string(num_part)};
    BigInt den = den_part.empty() ? BigInt(1) : BigInt{std::string(den_part)};
    return Rational(std::move(num), std::move(den));
}

} // namespace stirconv
