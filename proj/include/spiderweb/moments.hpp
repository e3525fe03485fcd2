#pragma once

#include <cstdint>

#include "spiderweb/genfun.hpp"
#include "spiderweb/netgraph.hpp"

namespace spiderweb {

// First and second moments of X, the number of idle paths between a fixed
// rank-0 / rank-l vertex pair when each link idles independently with
// probability q.

// Ex[X] = b^(l-k) * q^(l-1) for l >= k; for l < k it is q^(l-1) when a path
// exists and 0 otherwise (the caller supplies the endpoint pair to settle
// existence, so this overload requires l >= k).
double expected_paths(const NetworkParams& p, double q);

// Ex[X^2] = Ex[X] * phi_l(q), exact in exact arithmetic.
double second_moment(const NetworkParams& p, double q);

// Ex[X] * phi_asymptotic; two-pole residue surrogate for the second moment.
double second_moment_asymptotic(const NetworkParams& p, double q);

// Pr[X >= 1] <= min(1, Ex[X]).
double markov_upper_bound(const NetworkParams& p, double q);

// Pr[X >= 1] >= Ex[X]^2 / Ex[X^2] (Cauchy-Schwarz / second-moment method).
double chebyshev_lower_bound(const NetworkParams& p, double q);

// l -> infinity limit of Ex[X]^2 / Ex[X^2] along l = ck for supercritical q:
//   (bq-1)^2 / ((b-1)^2 q^2 + (bq-1)^2 q).
// Requires bq > 1.
double critical_ratio_limit(int b, double q);

// Exact-rational counterparts; q is taken as an exact rational.
BigRat expected_paths_exact(const NetworkParams& p, const BigRat& q);
BigRat second_moment_exact(const NetworkParams& p, const BigRat& q);

// Brute-force Ex[X^2] by enumerating ordered path pairs and counting shared
// links; cost b^(2(l-k)) path pairs. Cross-check oracle for small cases.
double brute_second_moment(const NetworkParams& p, double q,
                           std::uint64_t cap = default_enum_cap());
BigRat brute_second_moment_exact(const NetworkParams& p, const BigRat& q,
                                 std::uint64_t cap = default_enum_cap());

struct MomentReport {
    double ex_x = 0.0;
    double ex_x2_exact = 0.0;
    double ex_x2_asymptotic = 0.0;
    double markov_upper = 0.0;
    double chebyshev_lower = 0.0;
};

// Bundles the five quantities above; ex_x2_asymptotic is NaN when the
// residue surrogate is out of regime (q <= 1/b or q >= 1).
MomentReport moment_report(const NetworkParams& p, double q);

}  // namespace spiderweb
