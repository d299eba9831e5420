#include "stirconv/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirconv {

StirlingTable::StirlingTable(StirlingKind kind, int initial_rows) : kind_(kind) {
    if (initial_rows > 0) {
        std::lock_guard lock(mutex_);
        grow_locked(initial_rows - 1);
    }
}

void StirlingTable::grow_locked(int n_max) const {
    if (rows_.empty())
        rows_.push_back({BigInt(1)}); // s(0,0) = 1
    for (int n = static_cast<int>(rows_.size()); n <= n_max; ++n) {
        const auto &prev = rows_[n - 1];
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
        row[0] = 0;
        row[n] = 1;
        for (int k = 1; k < n; ++k) {
            BigInt mult = kind_ == StirlingKind::FirstUnsigned ? BigInt(n - 1) : BigInt(k);
            row[k] = prev[k - 1] + mult * prev[k];
        }
        rows_.push_back(std::move(row));
    }
}

BigInt StirlingTable::value(int n, int k) const {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("stirling index out of range: n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    std::lock_guard lock(mutex_);
    grow_locked(n);
    return rows_[n][k];
}

int StirlingTable::rows() const {
    std::lock_guard lock(mutex_);
    return static_cast<int>(rows_.size());
}

BigInt stirling1(int n, int k) {
    static StirlingTable table(StirlingKind::FirstUnsigned);
    return table.value(n, k);
}

BigInt stirling2(int n, int k) {
    static StirlingTable table(StirlingKind::Second);
    return table.value(n, k);
}

BigInt stirling2_explicit(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("stirling index out of range: n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binom_int(BigInt(k), j) * boost::multiprecision::pow(BigInt(j), n);
        sum += ((k - j) % 2 == 0) ? term : -term;
    }
    BigInt kfact = factorial(k);
    BigInt q, r;
    boost::multiprecision::divide_qr(sum, kfact, q, r);
    if (r != 0)
        throw std::logic_error("stirling2_explicit: alternating sum not divisible by k!");
    return q;
}

BigInt factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt factorial_ratio(int n, int m) {
    if (m < 0 || n < m)
        throw std::invalid_argument("factorial_ratio requires n >= m >= 0");
    BigInt r = 1;
    for (int i = m + 1; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binom_int(const BigInt &n, int k) {
    if (k < 0)
        throw std::invalid_argument("binomial with negative lower index");
    BigInt num = 1;
    for (int i = 0; i < k; ++i)
        num *= n - i;
    // A product of k consecutive integers is divisible by k!.
    return num / factorial(k);
}

MultiPoly binom_poly(const MultiPoly &alpha, int k) {
    if (k < 0)
        throw std::invalid_argument("binomial with negative lower index");
    MultiPoly r(1);
    for (int i = 0; i < k; ++i)
        r = (r * (alpha - MultiPoly(i))).scaled(Rational(1, i + 1));
    return r;
}

MultiPoly falling_poly(int n) {
    if (n < 0)
        throw std::invalid_argument("falling factorial of negative order");
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly r(1);
    for (int i = 0; i < n; ++i)
        r = r * (x - MultiPoly(i));
    return r;
}

MultiPoly rising_poly(int n) {
    if (n < 0)
        throw std::invalid_argument("rising factorial of negative order");
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly r(1);
    for (int i = 0; i < n; ++i)
        r = r * (x + MultiPoly(i));
    return r;
}

BigInt lah(int n, int m) {
    if (m < 1 || m > n)
        throw std::out_of_range("lah number requires 1 <= m <= n");
    return factorial_ratio(n, m) * binom_int(BigInt(n - 1), m - 1);
}

} // namespace stirconv
