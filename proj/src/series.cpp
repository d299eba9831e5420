#include "stirconv/series.hpp"

#include <stdexcept>

#include "stirconv/combinatorics.hpp"

namespace stirconv {

namespace {

void check_same_order(const PowerSeries &a, const PowerSeries &b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

} // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::constant(const MultiPoly &c, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const MultiPoly &PowerSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries::set_coeff(int n, MultiPoly p) {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(p);
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("truncation order out of range");
    PowerSeries s(new_order);
    for (int n = 0; n <= new_order; ++n)
        s.coeffs_[n] = coeffs_[n];
    return s;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries s(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s.coeffs_[i] = -coeffs_[i];
    return s;
}

PowerSeries &PowerSeries::operator+=(const PowerSeries &o) {
    check_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

PowerSeries operator-(PowerSeries a, const PowerSeries &b) {
    check_same_order(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
    check_same_order(a, b);
    int n_max = a.order();
    PowerSeries r(n_max);
    for (int i = 0; i <= n_max; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= n_max; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

PowerSeries PowerSeries::scaled(const MultiPoly &p) const {
    PowerSeries s(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s.coeffs_[i] = coeffs_[i] * p;
    return s;
}

PowerSeries PowerSeries::inverse() const {
    if (coeffs_[0] != MultiPoly(1))
        throw std::domain_error("non-unit constant term");
    PowerSeries b(order());
    b.coeffs_[0] = MultiPoly(1);
    for (int n = 1; n <= order(); ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k)
            acc += coeffs_[k] * b.coeffs_[n - k];
        b.coeffs_[n] = -acc;
    }
    return b;
}

PowerSeries series_binomial(const MultiPoly &alpha, int order) {
    PowerSeries s(order);
    s.set_coeff(0, MultiPoly(1));
    // binom_poly(alpha, n) built incrementally across n.
    MultiPoly binom(1);
    for (int n = 1; n <= order; ++n) {
        binom = (binom * (alpha - MultiPoly(n - 1))).scaled(Rational(1, n));
        s.set_coeff(n, n % 2 == 0 ? binom : -binom);
    }
    return s;
}

PowerSeries q_generating_series(int order) {
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly lam = MultiPoly::variable(Var::Lambda);
    MultiPoly y = MultiPoly::variable(Var::Y);

    // Denominator 1 - x + x (1 - tau)^y; its constant coefficient is
    // exactly 1, which is what makes inverse() applicable.
    PowerSeries denom =
        PowerSeries::constant(MultiPoly(1) - x, order) + series_binomial(y, order).scaled(x);
    return series_binomial(lam, order) * denom.inverse();
}

} // namespace stirconv
