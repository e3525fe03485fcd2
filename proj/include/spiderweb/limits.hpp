#pragma once

#include <vector>

#include "spiderweb/errors.hpp"

namespace spiderweb {

// Phase-transition quantities along the scaling l = c*k, k -> infinity.

// Critical vacancy probability q_c = b^{-(c-1)/c}. Requires b >= 2, c >= 1.
double critical_vacancy(int b, double c);

// Smallest fixed point in [0, 1) of x = (1 - q(1-x))^b, the extinction
// probability of the associated branching process. Requires q > 1/b.
// Bisection to a sign-stable interval, then Newton polish; the residual
// |f(xi)| is verified <= 1e-14.
double fixed_point_xi(int b, double q);

// Limiting end-to-end linking probability along l = ck:
//   0 for q < q_c, (1 - xi)^2 for q > q_c.
// Exactly at q == q_c the limit is not determined by this dichotomy and a
// ThresholdError is thrown.
double limiting_Q(int b, double q, double c);

// Mean offspring count at the fixed point, eta = b(1 - q(1-xi))^(b-1),
// equivalently b * xi^((b-1)/b). Requires q > 1/b. May be >= 1 near the
// (c-dependent) threshold; callers needing a contraction must check.
double eta(int b, double q);

// Convergence exponent alpha = ln(1/eta) / ln(bq). Requires eta < 1, else
// RegimeError.
double alpha_exponent(int b, double q);

// Iterates p_0 = 0, p_{r+1} = (1 - q(1-p_r))^b; returns p_0..p_r. The
// sequence increases to xi.
std::vector<double> branching_extinction_seq(int b, double q, int r);

// Depressed vacancy q_* = b^(-(c-2)/(c-1)) * q^(1/(c-1)^2). Requires c > 2
// and checks q_* < q and q_* < q_{c-1} (the critical vacancy for ratio c-1);
// violations throw RegimeError.
double q_star(int b, double q, double c);

// H = ceil((b q_*)^floor(k/2)), the recursion's fan-out budget.
long long H_threshold(int b, double q, double c, int k);

struct Lemma36Result {
    bool holds = false;
    double max_phi = 0.0;
    int argmax = 0; // h attaining max_phi
};

// Checks phi_h(q_*) <= k for all 0 <= h <= l-k with l = round(c*k).
Lemma36Result lemma36_check(int b, int k, double c, double q);

struct ThresholdReport {
    int b = 0;
    double c = 0.0;
    double q = 0.0;
    double q_c = 0.0;
    double q_limit = 0.0;
    double xi = 0.0;    // NaN when q <= 1/b
    double eta = 0.0;   // NaN when q <= 1/b
    double alpha = 0.0; // NaN unless eta < 1
    bool has_alpha = false;
    double q_star = 0.0; // NaN unless c > 2 and the q_* checks hold
    bool has_q_star = false;
};

// Bundle of the above; throws ThresholdError when q == q_c exactly.
ThresholdReport limits_report(int b, double q, double c);

}  // namespace spiderweb
