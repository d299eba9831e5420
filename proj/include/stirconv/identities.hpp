#ifndef STIRCONV_IDENTITIES_HPP
#define STIRCONV_IDENTITIES_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stirconv/multipoly.hpp"

namespace stirconv {

/// One entry per verifiable identity. The two-parameter convolution (ThmS)
/// specializes at y = 1, -1, 1/2, 2 to the four theorem identities, whose
/// lambda = 0 specializations are the four corollaries; Gould3_164 is the
/// half-integer binomial summation used to close the y = 1/2 case.
enum class IdentityId {
    ThmS,
    Thm1A,
    Thm1B,
    Thm2A,
    Thm2B,
    CorOrthogonality,
    CorLah,
    CorYqA,
    CorYqB,
    Gould3_164,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
/// Short human description used by the CLI.
std::string_view identity_description(IdentityId id);
const std::vector<IdentityId> &all_identities();

/// Pair arguments are (n, m) with 1 <= m <= n for every identity except
/// Gould3_164, whose pairs are (m, l) with m >= 0 and l >= 1. Arguments
/// outside the stated range raise std::domain_error.
///
/// Both sides are elements of Q[lambda, y] (constants for the corollaries
/// and the Gould helper); an identity holds at a pair iff the canonical
/// difference lhs - rhs is the zero polynomial.
MultiPoly identity_lhs(IdentityId id, int a, int b);
MultiPoly identity_rhs(IdentityId id, int a, int b);
MultiPoly identity_difference(IdentityId id, int a, int b);

struct PairFailure {
    int n;
    int m;
    MultiPoly difference; // lhs - rhs, canonical
};

/// Outcome of checking one identity over a set of pairs. PASS iff the
/// failure list is empty.
struct VerificationReport {
    IdentityId identity;
    int n_max = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<PairFailure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }

    /// Stable schema {identity, n_max, pairs_checked, status, failures,
    /// elapsed_ms}; key order is fixed so emitted reports round-trip
    /// byte-identically.
    nlohmann::ordered_json to_json(bool ascii = false) const;
    std::string to_text(bool ascii = false) const;
};

VerificationReport verify_thm_s(int n, int m);
VerificationReport verify_thm1(char variant, int n, int m);
VerificationReport verify_thm2(char variant, int n, int m);
VerificationReport verify_corollary(IdentityId id, int n, int m);
VerificationReport gould_3_164(int m, int l);

struct SweepOptions {
    int jobs = 1;
    /// Additionally evaluate both sides at random rational points; guards
    /// against correlated bugs in the polynomial engine. Deterministic per
    /// pair regardless of worker count.
    bool sample = false;
    unsigned seed = 20240811;
    int sample_points = 3;
};

/// Aggregated check over all pairs up to n_max: 1 <= m <= n <= n_max, or
/// the rectangle 0 <= m <= n_max, 1 <= l <= n_max for Gould3_164. Failures
/// are reported sorted by pair.
VerificationReport verify_range(IdentityId id, int n_max, const SweepOptions &opts = {});

} // namespace stirconv

#endif
