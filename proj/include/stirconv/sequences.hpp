#ifndef STIRCONV_SEQUENCES_HPP
#define STIRCONV_SEQUENCES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirconv/multipoly.hpp"
#include "stirconv/series.hpp"

namespace stirconv {

/// Independent computational routes to the same Q_n polynomial.
enum class Route { Recurrence, DoubleSum, TripleSum, Series };

const char *route_name(Route r);
std::optional<Route> route_from_name(std::string_view name);

/// Builds the polynomial families Q_n(x, y, lambda) and P_n(x, z) by every
/// available route. Recurrence results are memoized per instance; use one
/// instance per thread (route functions are deterministic and side-effect
/// free apart from memo growth).
class Sequences {
  public:
    /// Q_n = (-1)^n C(lambda,n) - x sum_{k=1..n} (-1)^k C(y,k) Q_{n-k},
    /// with Q_0 = 1. Memoized.
    const MultiPoly &q_recurrence(int n);

    /// Q_n = sum_{m=0..n} sum_{k=0..m} (-1)^(n+k) C(m,k) C(lambda+ky, n) x^m.
    MultiPoly q_double_sum(int n) const;

    /// Q_n = sum over m <= j <= i <= n of
    ///       (-1)^(m-i) (m!/n!) [n,i] C(i,j) {j,m} x^m lambda^(i-j) y^j.
    MultiPoly q_triple_sum(int n) const;

    /// Coefficient n of the generating series; the cached series is rebuilt
    /// at a higher order when needed.
    MultiPoly q_from_series(int n);

    MultiPoly q_by_route(Route r, int n);

    /// P_{n+1} = x C(n+z, n) - x sum_{m=1..n} C(n-m+z, n-m+1) P_m, with
    /// P_1 = x. Defined for n >= 1; n = 0 raises std::domain_error.
    const MultiPoly &p_recurrence(int n);

    /// P_n = sum_{k=1..n} sum_{j=1..k}
    ///       (-1)^(j-1) (j-1)!/(n-1)! [n,k] {k,j} x^j z^(k-1), n >= 1.
    MultiPoly p_double_sum(int n) const;

    /// True iff x * Q_n(lambda := -1-z, y := -z) equals P_{n+1} exactly.
    bool q_reduces_to_p(int n);

  private:
    std::vector<MultiPoly> q_memo_; // index n
    std::vector<MultiPoly> p_memo_; // index n-1
    std::optional<PowerSeries> q_series_;
};

struct SingleSumResult {
    double value;
    int terms_used;
};

/// Raised when the term budget runs out before three consecutive terms fall
/// under the tolerance; carries the partial sum accumulated so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(double partial, int terms)
        : std::runtime_error("series did not converge within " + std::to_string(terms) +
                             " terms"),
          partial_sum(partial), terms_used(terms) {}

    double partial_sum;
    int terms_used;
};

/// Numeric evaluation of the infinite single-sum expression
///   Q_n = sum_{k>=0} (-1)^(n+k) C(lambda+ky, n) x^k / (1-x)^(k+1)
/// at an exact rational point. Requires x < 1/2 so the geometric factor
/// dominates the polynomial growth of the binomial term; x >= 1/2 raises
/// std::domain_error("divergent parameter regime"). Truncation: stops once
/// the last 3 consecutive term magnitudes are each below
/// rel_tol * max(1, |partial sum|) (the summand alternates in sign, so a
/// single-term test would false-trigger near sign changes).
SingleSumResult q_single_sum_numeric(int n, const Rational &x, const Rational &y,
                                     const Rational &lambda, double rel_tol, int max_terms);

} // namespace stirconv

#endif
