#ifndef STIRCONV_SERIES_HPP
#define STIRCONV_SERIES_HPP

#include <vector>

#include "stirconv/multipoly.hpp"

namespace stirconv {

/// Default truncation order; covers every sweep in the test suite with margin.
inline constexpr int kDefaultSeriesOrder = 16;

/// Formal power series in tau truncated at a fixed order, with MultiPoly
/// coefficients. tau itself is not a ring variable; it only indexes the
/// coefficient list. Binary operations require equal orders -- silent
/// truncation mismatches are the classic bug in series code, so mixing
/// orders raises std::invalid_argument instead.
class PowerSeries {
  public:
    /// Zero series of the given order (coefficients tau^0 .. tau^order).
    explicit PowerSeries(int order);

    static PowerSeries constant(const MultiPoly &c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const MultiPoly &coeff(int n) const;
    void set_coeff(int n, MultiPoly p);

    /// Drops coefficients above new_order (new_order <= order).
    PowerSeries truncated(int new_order) const;

    PowerSeries operator-() const;
    PowerSeries &operator+=(const PowerSeries &o);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries &b);
    /// Cauchy product, truncated.
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);

    PowerSeries scaled(const MultiPoly &p) const;

    /// Multiplicative inverse up to the truncation order, by the recursive
    /// convolution b_n = -sum_{k=1..n} a_k b_{n-k}. The constant coefficient
    /// must be exactly 1; anything else raises std::domain_error
    /// ("non-unit constant term").
    PowerSeries inverse() const;

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

  private:
    std::vector<MultiPoly> coeffs_;
};

/// (1 - tau)^alpha truncated at `order`: coefficient of tau^n is
/// (-1)^n * binom_poly(alpha, n).
PowerSeries series_binomial(const MultiPoly &alpha, int order);

/// The generating series (1 - tau)^lambda / (1 - x + x (1 - tau)^y);
/// coefficient n is the polynomial Q_n.
PowerSeries q_generating_series(int order);

} // namespace stirconv

#endif
