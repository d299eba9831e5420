#ifndef STIRCONV_COMBINATORICS_HPP
#define STIRCONV_COMBINATORICS_HPP

#include <mutex>
#include <vector>

#include "stirconv/multipoly.hpp"
#include "stirconv/rational.hpp"

namespace stirconv {

enum class StirlingKind { FirstUnsigned, Second };

/// Memoized triangle of Stirling numbers, grown on demand.
///
/// First kind (unsigned): s(n+1,k) = s(n,k-1) + n*s(n,k).
/// Second kind:           s(n+1,k) = s(n,k-1) + k*s(n,k).
/// Growth is serialized internally; value() behaves as a pure function and
/// may be called from several threads.
class StirlingTable {
  public:
    explicit StirlingTable(StirlingKind kind, int initial_rows = 0);

    StirlingKind kind() const { return kind_; }

    /// s(n, k) for 0 <= k <= n; anything else raises std::out_of_range.
    BigInt value(int n, int k) const;

    int rows() const;

  private:
    void grow_locked(int n_max) const;

    StirlingKind kind_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

/// Unsigned Stirling number of the first kind [n, k] (shared table).
BigInt stirling1(int n, int k);
/// Stirling number of the second kind {n, k} via the recurrence triangle.
BigInt stirling2(int n, int k);
/// {n, k} computed independently as (1/k!) * sum_j (-1)^(k-j) C(k,j) j^n.
/// A non-integer sum would mean a broken substrate and raises
/// std::logic_error; it must never happen.
BigInt stirling2_explicit(int n, int k);

BigInt factorial(int n);
/// n!/m! as an exact integer, n >= m >= 0.
BigInt factorial_ratio(int n, int m);

/// Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k! for any integer n and
/// k >= 0 (k < 0 raises std::invalid_argument).
BigInt binom_int(const BigInt &n, int k);

/// Binomial coefficient with a polynomial upper argument, expanded as the
/// degree k*deg(alpha) polynomial prod_{i<k}(alpha - i) / k!.
MultiPoly binom_poly(const MultiPoly &alpha, int k);

/// Falling factorial x(x-1)...(x-n+1) as a polynomial in x; 1 for n = 0.
MultiPoly falling_poly(int n);
/// Rising factorial x(x+1)...(x+n-1) as a polynomial in x; 1 for n = 0.
MultiPoly rising_poly(int n);

/// Lah number (n!/m!) * C(n-1, m-1) for 1 <= m <= n.
BigInt lah(int n, int m);

} // namespace stirconv

#endif
