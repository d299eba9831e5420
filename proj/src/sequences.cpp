#include "stirconv/sequences.hpp"

#include <cmath>
#include <cstdlib>

#include "stirconv/combinatorics.hpp"

namespace stirconv {

namespace {

int parity_sign(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

void check_n_nonnegative(int n) {
    if (n < 0)
        throw std::domain_error("sequence index must be nonnegative");
}

void check_p_index(int n) {
    if (n < 1)
        throw std::domain_error("P sequence starts at n = 1");
}

BigInt floor_rat(const Rational &r) {
    BigInt q, rem;
    boost::multiprecision::divide_qr(r.numerator(), r.denominator(), q, rem);
    if (rem != 0 && r.numerator() < 0)
        --q;
    return q;
}

/// First index k after which the factor C(lambda + k y, n) can no longer be
/// exactly zero. The factor vanishes iff lambda + k y lands in {0,..,n-1},
/// which for y != 0 only happens up to a computable k; for y == 0 it is
/// either always or never zero, and an all-zero tail may stop immediately.
int single_sum_zero_horizon(int n, const Rational &y, const Rational &lambda,
                            int max_terms) {
    if (n == 0 || y.is_zero())
        return 0;
    Rational last_k = y.sign() > 0 ? (Rational(n - 1) - lambda) / y : lambda / (-y);
    BigInt k_min = floor_rat(last_k) + 1;
    if (k_min < 0)
        return 0;
    if (k_min > max_terms)
        return max_terms; // window never arms; the budget check reports it
    return k_min.convert_to<int>();
}

} // namespace

const char *route_name(Route r) {
    switch (r) {
    case Route::Recurrence:
        return "recurrence";
    case Route::DoubleSum:
        return "double-sum";
    case Route::TripleSum:
        return "triple-sum";
    case Route::Series:
        return "series";
    }
    return "?";
}

std::optional<Route> route_from_name(std::string_view name) {
    if (name == "recurrence")
        return Route::Recurrence;
    if (name == "double-sum")
        return Route::DoubleSum;
    if (name == "triple-sum")
        return Route::TripleSum;
    if (name == "series")
        return Route::Series;
    return std::nullopt;
}

const MultiPoly &Sequences::q_recurrence(int n) {
    check_n_nonnegative(n);
    if (q_memo_.empty())
        q_memo_.push_back(MultiPoly(1));
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly lam = MultiPoly::variable(Var::Lambda);
    MultiPoly y = MultiPoly::variable(Var::Y);
    while (static_cast<int>(q_memo_.size()) <= n) {
        int m = static_cast<int>(q_memo_.size());
        MultiPoly q = binom_poly(lam, m).scaled(Rational(parity_sign(m)));
        MultiPoly conv;
        for (int k = 1; k <= m; ++k)
            conv += binom_poly(y, k).scaled(Rational(parity_sign(k))) * q_memo_[m - k];
        q -= x * conv;
        q_memo_.push_back(std::move(q));
    }
    return q_memo_[static_cast<std::size_t>(n)];
}

MultiPoly Sequences::q_double_sum(int n) const {
    check_n_nonnegative(n);
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly lam = MultiPoly::variable(Var::Lambda);
    MultiPoly y = MultiPoly::variable(Var::Y);

    // C(lambda + k y, n) depends on k only; build each once.
    std::vector<MultiPoly> upper(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        upper[k] = binom_poly(lam + y.scaled(Rational(k)), n);

    MultiPoly sum;
    MultiPoly xpow(1);
    for (int m = 0; m <= n; ++m) {
        MultiPoly inner;
        for (int k = 0; k <= m; ++k)
            inner += upper[k].scaled(Rational(parity_sign(n + k)) * Rational(binom_int(BigInt(m), k)));
        sum += inner * xpow;
        xpow = xpow * x;
    }
    return sum;
}

MultiPoly Sequences::q_triple_sum(int n) const {
    check_n_nonnegative(n);
    BigInt nfact = factorial(n);
    MultiPoly sum;
    for (int m = 0; m <= n; ++m) {
        BigInt mfact = factorial(m);
        for (int i = m; i <= n; ++i) {
            BigInt s1 = stirling1(n, i);
            for (int j = m; j <= i; ++j) {
                BigInt num = mfact * s1 * binom_int(BigInt(i), j) * stirling2(j, m);
                Rational c = Rational(num, nfact) * Rational(parity_sign(m - i));
                Monomial mono;
                mono[Var::X] = m;
                mono[Var::Lambda] = i - j;
                mono[Var::Y] = j;
                sum.add_term(mono, c);
            }
        }
    }
    return sum;
}

MultiPoly Sequences::q_from_series(int n) {
    check_n_nonnegative(n);
    if (!q_series_ || q_series_->order() < n)
        q_series_ = q_generating_series(std::max(n, kDefaultSeriesOrder));
    return q_series_->coeff(n);
}

MultiPoly Sequences::q_by_route(Route r, int n) {
    switch (r) {
    case Route::Recurrence:
        return q_recurrence(n);
    case Route::DoubleSum:
        return q_double_sum(n);
    case Route::TripleSum:
        return q_triple_sum(n);
    case Route::Series:
        return q_from_series(n);
    }
    throw std::invalid_argument("unknown route");
}

const MultiPoly &Sequences::p_recurrence(int n) {
    check_p_index(n);
    MultiPoly x = MultiPoly::variable(Var::X);
    MultiPoly z = MultiPoly::variable(Var::Z);
    if (p_memo_.empty())
        p_memo_.push_back(x); // P_1
    while (static_cast<int>(p_memo_.size()) < n) {
        // Step from P_1..P_k to P_{k+1}.
        int k = static_cast<int>(p_memo_.size());
        MultiPoly p = binom_poly(z + MultiPoly(k), k);
        for (int m = 1; m <= k; ++m)
            p -= binom_poly(z + MultiPoly(k - m), k - m + 1) * p_memo_[m - 1];
        p_memo_.push_back(x * p);
    }
    return p_memo_[static_cast<std::size_t>(n) - 1];
}

MultiPoly Sequences::p_double_sum(int n) const {
    check_p_index(n);
    BigInt nm1fact = factorial(n - 1);
    MultiPoly sum;
    for (int k = 1; k <= n; ++k) {
        BigInt s1 = stirling1(n, k);
        for (int j = 1; j <= k; ++j) {
            BigInt num = factorial(j - 1) * s1 * stirling2(k, j);
            Rational c = Rational(num, nm1fact) * Rational(parity_sign(j - 1));
            Monomial mono;
            mono[Var::X] = j;
            mono[Var::Z] = k - 1;
            sum.add_term(mono, c);
        }
    }
    return sum;
}

bool Sequences::q_reduces_to_p(int n) {
    check_n_nonnegative(n);
    MultiPoly z = MultiPoly::variable(Var::Z);
    MultiPoly specialized = q_recurrence(n)
                                .substitute(Var::Lambda, MultiPoly(-1) - z)
                                .substitute(Var::Y, -z);
    return MultiPoly::variable(Var::X) * specialized == p_recurrence(n + 1);
}

SingleSumResult q_single_sum_numeric(int n, const Rational &x, const Rational &y,
                                     const Rational &lambda, double rel_tol, int max_terms) {
    check_n_nonnegative(n);
    if (x >= Rational(1, 2))
        throw std::domain_error("divergent parameter regime");
    if (!(rel_tol > 0))
        throw std::domain_error("rel_tol must be positive");
    if (max_terms < 1)
        throw std::domain_error("max_terms must be at least 1");

    double xd = x.to_double();
    double yd = y.to_double();
    double ld = lambda.to_double();
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i)
        nfact *= i;

    // geo = x^k / (1-x)^(k+1); |x/(x-1)| < 1 for every rational x < 1/2.
    double geo = 1.0 / (1.0 - xd);
    double ratio = xd / (1.0 - xd);

    // The binomial factor is exactly zero for small k in integer regimes
    // (e.g. lambda = 0, y = 1 zeroes every term before k = n), so the
    // small-term window must not arm until zeros are impossible.
    int zero_horizon = single_sum_zero_horizon(n, y, lambda, max_terms);

    double sum = 0.0;
    double last[3] = {0, 0, 0};
    for (int k = 0; k < max_terms; ++k) {
        double binom = 1.0;
        for (int i = 0; i < n; ++i)
            binom *= ld + k * yd - i;
        binom /= nfact;
        double term = ((n + k) % 2 == 0 ? 1.0 : -1.0) * binom * geo;
        sum += term;
        last[k % 3] = std::abs(term);
        double thresh = rel_tol * std::max(1.0, std::abs(sum));
        if (k >= 2 && k >= zero_horizon + 2 && last[0] < thresh && last[1] < thresh &&
            last[2] < thresh)
            return {sum, k + 1};
        geo *= ratio;
    }
    throw ConvergenceError(sum, max_terms);
}

} // namespace stirconv
