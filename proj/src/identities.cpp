#include "stirconv/identities.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stirconv/combinatorics.hpp"

namespace stirconv {

namespace {

int parity_sign(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

Rational pow2(int e) { return Rational(2).pow(e); }

/// C(a, l) for rational a, as the falling factorial a(a-1)...(a-l+1)/l!.
Rational binom_rat(const Rational &a, int l) {
    Rational r(1);
    for (int i = 0; i < l; ++i)
        r *= (a - Rational(i)) * Rational(1, i + 1);
    return r;
}

void check_theorem_range(int n, int m) {
    if (m < 1 || m > n)
        throw std::domain_error("outside stated range: requires 1 <= m <= n");
}

void check_gould_range(int m, int l) {
    if (l < 1)
        throw std::domain_error("outside stated range: requires l >= 1");
    if (m < 0)
        throw std::domain_error("outside stated range: requires m >= 0");
}

bool is_gould(IdentityId id) { return id == IdentityId::Gould3_164; }

bool is_corollary(IdentityId id) {
    return id == IdentityId::CorOrthogonality || id == IdentityId::CorLah ||
           id == IdentityId::CorYqA || id == IdentityId::CorYqB;
}

/// Shared double-sum shape of the theorem left-hand sides:
/// sum_{i=m}^{n} sum_{j=m}^{i} sign * [n,i] C(i,j) {j,m} lambda^(i-j) * w(j).
MultiPoly theorem_lhs(IdentityId id, int n, int m) {
    MultiPoly sum;
    for (int i = m; i <= n; ++i) {
        BigInt s1 = stirling1(n, i);
        for (int j = m; j <= i; ++j) {
            Rational c(s1 * binom_int(BigInt(i), j) * stirling2(j, m));
            switch (id) {
            case IdentityId::ThmS:
            case IdentityId::Thm1A:
                c *= Rational(parity_sign(n + i));
                break;
            case IdentityId::Thm1B:
                c *= Rational(parity_sign(i + j));
                break;
            case IdentityId::Thm2A:
                c *= Rational(parity_sign(n + i)) * pow2(n - j);
                break;
            case IdentityId::Thm2B:
                c *= Rational(parity_sign(m + i)) * pow2(j - m);
                break;
            default:
                throw std::logic_error("theorem_lhs: not a theorem identity");
            }
            Monomial mono;
            mono[Var::Lambda] = i - j;
            if (id == IdentityId::ThmS)
                mono[Var::Y] = j;
            sum.add_term(mono, c);
        }
    }
    return sum;
}

MultiPoly theorem_rhs(IdentityId id, int n, int m) {
    MultiPoly lam = MultiPoly::variable(Var::Lambda);
    MultiPoly y = MultiPoly::variable(Var::Y);
    Rational scale(factorial_ratio(n, m));
    switch (id) {
    case IdentityId::ThmS: {
        MultiPoly sum;
        for (int k = 0; k <= m; ++k) {
            Rational c = Rational(parity_sign(m + k)) * Rational(binom_int(BigInt(m), k));
            sum += binom_poly(lam + y.scaled(Rational(k)), n).scaled(c);
        }
        return sum.scaled(scale);
    }
    case IdentityId::Thm1A:
        return binom_poly(lam, n - m).scaled(scale);
    case IdentityId::Thm1B:
        return binom_poly(lam - MultiPoly(m), n - m).scaled(scale * Rational(parity_sign(m + n)));
    case IdentityId::Thm2A: {
        MultiPoly sum;
        for (int l = m; l <= n; ++l) {
            Rational c = Rational(m, l) * Rational(binom_int(BigInt(-l), l - m)) *
                         pow2(m + n - 2 * l);
            sum += binom_poly(lam, n - l).scaled(c);
        }
        return sum.scaled(scale);
    }
    case IdentityId::Thm2B: {
        MultiPoly sum;
        for (int l = m; l <= n; ++l) {
            Rational c = Rational(binom_int(BigInt(m), l - m)) * pow2(m - l);
            sum += binom_poly(lam, n - l).scaled(c);
        }
        return sum.scaled(scale * Rational(parity_sign(m + n)));
    }
    default:
        throw std::logic_error("theorem_rhs: not a theorem identity");
    }
}

Rational corollary_lhs(IdentityId id, int n, int m) {
    Rational sum;
    for (int k = m; k <= n; ++k) {
        Rational c(stirling1(n, k) * stirling2(k, m));
        switch (id) {
        case IdentityId::CorOrthogonality:
            c *= Rational(parity_sign(n - k));
            break;
        case IdentityId::CorLah:
            break;
        case IdentityId::CorYqA:
            c *= Rational(-2).pow(n - k);
            break;
        case IdentityId::CorYqB:
            // Exponent taken over the summation index k; forced by the
            // lambda = 0 specialization of the parent theorem.
            c *= Rational(-2).pow(k - m);
            break;
        default:
            throw std::logic_error("corollary_lhs: not a corollary identity");
        }
        sum += c;
    }
    return sum;
}

Rational corollary_rhs(IdentityId id, int n, int m) {
    switch (id) {
    case IdentityId::CorOrthogonality:
        return Rational(m == n ? 1 : 0);
    case IdentityId::CorLah:
        return Rational(factorial_ratio(n, m) * binom_int(BigInt(n - 1), m - 1));
    case IdentityId::CorYqA:
        return Rational(factorial_ratio(n - 1, m - 1) * binom_int(BigInt(-n), n - m)) *
               pow2(m - n);
    case IdentityId::CorYqB:
        return Rational(factorial_ratio(n, m) * binom_int(BigInt(m), n - m)) *
               Rational(-2).pow(m - n);
    default:
        throw std::logic_error("corollary_rhs: not a corollary identity");
    }
}

Rational gould_lhs(int m, int l) {
    Rational sum;
    for (int k = 0; k <= m; ++k)
        sum += Rational(parity_sign(m - k)) * Rational(binom_int(BigInt(m), k)) *
               binom_rat(Rational(k, 2), l);
    return sum;
}

Rational gould_rhs(int m, int l) {
    if (l < m)
        return Rational(0); // binomial over a negative lower index vanishes
    return Rational(m, l) * Rational(binom_int(BigInt(-l), l - m)) * pow2(m - 2 * l);
}

std::vector<std::pair<int, int>> identity_pairs(IdentityId id, int n_max) {
    std::vector<std::pair<int, int>> pairs;
    if (is_gould(id)) {
        for (int m = 0; m <= n_max; ++m)
            for (int l = 1; l <= n_max; ++l)
                pairs.emplace_back(m, l);
    } else {
        for (int n = 1; n <= n_max; ++n)
            for (int m = 1; m <= n; ++m)
                pairs.emplace_back(n, m);
    }
    return pairs;
}

Rational random_rational(std::mt19937 &rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

/// Evaluates both sides at random rational points and compares exactly.
bool sample_agrees(IdentityId id, int a, int b, const SweepOptions &opts) {
    std::mt19937 rng(opts.seed + 1000003u * static_cast<unsigned>(a) +
                     static_cast<unsigned>(b));
    MultiPoly lhs = identity_lhs(id, a, b);
    MultiPoly rhs = identity_rhs(id, a, b);
    for (int p = 0; p < opts.sample_points; ++p) {
        std::map<Var, Rational> point{{Var::Lambda, random_rational(rng)},
                                      {Var::Y, random_rational(rng)}};
        if (lhs.eval(point) != rhs.eval(point))
            return false;
    }
    return true;
}

VerificationReport single_pair_report(IdentityId id, int a, int b) {
    VerificationReport report;
    report.identity = id;
    report.n_max = a;
    report.pairs = {{a, b}};
    auto start = std::chrono::steady_clock::now();
    MultiPoly diff = identity_difference(id, a, b);
    if (!diff.is_zero())
        report.failures.push_back({a, b, std::move(diff)});
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace

std::string_view identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::ThmS:
        return "thmS";
    case IdentityId::Thm1A:
        return "thm1a";
    case IdentityId::Thm1B:
        return "thm1b";
    case IdentityId::Thm2A:
        return "thm2a";
    case IdentityId::Thm2B:
        return "thm2b";
    case IdentityId::CorOrthogonality:
        return "cor-orth";
    case IdentityId::CorLah:
        return "cor-lah";
    case IdentityId::CorYqA:
        return "cor-yq-a";
    case IdentityId::CorYqB:
        return "cor-yq-b";
    case IdentityId::Gould3_164:
        return "gould";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (IdentityId id : all_identities())
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

std::string_view identity_description(IdentityId id) {
    switch (id) {
    case IdentityId::ThmS:
        return "two-parameter Stirling convolution in Q[lambda, y]";
    case IdentityId::Thm1A:
        return "convolution with weight 1 vs (n!/m!) C(lambda, n-m)";
    case IdentityId::Thm1B:
        return "alternating convolution vs (n!/m!) C(lambda-m, n-m) (-1)^(m+n)";
    case IdentityId::Thm2A:
        return "convolution with weight 2^(n-j) vs half-integer binomial sum";
    case IdentityId::Thm2B:
        return "convolution with weight 2^(j-m) vs binomial sum in powers of 2";
    case IdentityId::CorOrthogonality:
        return "orthogonality of the two Stirling kinds";
    case IdentityId::CorLah:
        return "Stirling convolution to the Lah number (n!/m!) C(n-1, m-1)";
    case IdentityId::CorYqA:
        return "(-2)-weighted convolution, negative-upper-index binomial form";
    case IdentityId::CorYqB:
        return "(-2)-weighted convolution, binomial C(m, n-m) form";
    case IdentityId::Gould3_164:
        return "alternating sum of half-integer binomials C(k/2, l)";
    }
    return "?";
}

const std::vector<IdentityId> &all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::ThmS,  IdentityId::Thm1A,            IdentityId::Thm1B,
        IdentityId::Thm2A, IdentityId::Thm2B,            IdentityId::CorOrthogonality,
        IdentityId::CorLah, IdentityId::CorYqA,          IdentityId::CorYqB,
        IdentityId::Gould3_164,
    };
    return ids;
}

MultiPoly identity_lhs(IdentityId id, int a, int b) {
    if (is_gould(id)) {
        check_gould_range(a, b);
        return MultiPoly(gould_lhs(a, b));
    }
    check_theorem_range(a, b);
    if (is_corollary(id))
        return MultiPoly(corollary_lhs(id, a, b));
    return theorem_lhs(id, a, b);
}

MultiPoly identity_rhs(IdentityId id, int a, int b) {
    if (is_gould(id)) {
        check_gould_range(a, b);
        return MultiPoly(gould_rhs(a, b));
    }
    check_theorem_range(a, b);
    if (is_corollary(id))
        return MultiPoly(corollary_rhs(id, a, b));
    return theorem_rhs(id, a, b);
}

MultiPoly identity_difference(IdentityId id, int a, int b) {
    return identity_lhs(id, a, b) - identity_rhs(id, a, b);
}

VerificationReport verify_thm_s(int n, int m) {
    return single_pair_report(IdentityId::ThmS, n, m);
}

VerificationReport verify_thm1(char variant, int n, int m) {
    if (variant != 'a' && variant != 'b')
        throw std::invalid_argument("variant must be 'a' or 'b'");
    return single_pair_report(variant == 'a' ? IdentityId::Thm1A : IdentityId::Thm1B, n, m);
}

VerificationReport verify_thm2(char variant, int n, int m) {
    if (variant != 'a' && variant != 'b')
        throw std::invalid_argument("variant must be 'a' or 'b'");
    return single_pair_report(variant == 'a' ? IdentityId::Thm2A : IdentityId::Thm2B, n, m);
}

VerificationReport verify_corollary(IdentityId id, int n, int m) {
    if (!is_corollary(id))
        throw std::invalid_argument("not a corollary identity");
    return single_pair_report(id, n, m);
}

VerificationReport gould_3_164(int m, int l) {
    return single_pair_report(IdentityId::Gould3_164, m, l);
}

VerificationReport verify_range(IdentityId id, int n_max, const SweepOptions &opts) {
    if (n_max < 1)
        throw std::domain_error("n_max must be at least 1");
    VerificationReport report;
    report.identity = id;
    report.n_max = n_max;
    report.pairs = identity_pairs(id, n_max);

    auto start = std::chrono::steady_clock::now();

    // Warm the shared triangles once so workers mostly read.
    stirling1(n_max, 0);
    stirling2(n_max, 0);

    std::vector<std::optional<PairFailure>> results(report.pairs.size());
    auto check_pair = [&](std::size_t idx) {
        auto [a, b] = report.pairs[idx];
        MultiPoly diff = identity_difference(id, a, b);
        bool ok = diff.is_zero();
        if (ok && opts.sample)
            ok = sample_agrees(id, a, b, opts);
        if (!ok)
            results[idx] = PairFailure{a, b, std::move(diff)};
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < report.pairs.size(); ++i)
            check_pair(i);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < report.pairs.size();
                     i = next.fetch_add(1))
                    check_pair(i);
            });
        }
        for (auto &t : workers)
            t.join();
    }

    for (auto &r : results)
        if (r)
            report.failures.push_back(std::move(*r));
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

nlohmann::ordered_json VerificationReport::to_json(bool ascii) const {
    nlohmann::ordered_json j;
    j["identity"] = std::string(identity_name(identity));
    j["n_max"] = n_max;
    j["pairs_checked"] = pairs.size();
    j["status"] = passed() ? "PASS" : "FAIL";
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto &f : failures) {
        nlohmann::ordered_json entry;
        entry["n"] = f.n;
        entry["m"] = f.m;
        entry["difference"] = f.difference.to_string(ascii);
        fails.push_back(std::move(entry));
    }
    j["failures"] = std::move(fails);
    j["elapsed_ms"] = elapsed.count();
    return j;
}

std::string VerificationReport::to_text(bool ascii) const {
    std::ostringstream out;
    bool gould = identity == IdentityId::Gould3_164;
    out << "identity: " << identity_name(identity) << "\n";
    if (pairs.size() == 1) {
        out << "pair: " << (gould ? "m=" : "n=") << pairs[0].first
            << (gould ? ", l=" : ", m=") << pairs[0].second << "\n";
    } else if (gould) {
        out << "range: 0 <= m <= " << n_max << ", 1 <= l <= " << n_max << "\n";
    } else {
        out << "range: 1 <= m <= n <= " << n_max << "\n";
    }
    out << "pairs checked: " << pairs.size() << "\n";
    out << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto &f : failures) {
        out << "  " << (gould ? "m=" : "n=") << f.n << " " << (gould ? "l=" : "m=") << f.m
            << " difference: " << f.difference.to_string(ascii) << "\n";
    }
    if (identity == IdentityId::CorYqB)
        out << "note: exponent taken as (-2)^(k-m) over the summation index k; "
               "printed forms of this identity sometimes write an unbound index j\n";
    out << "elapsed: " << elapsed.count() << " ms\n";
    return out.str();
}

} // namespace stirconv
