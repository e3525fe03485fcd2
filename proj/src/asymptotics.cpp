#include "spiderweb/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "spiderweb/errors.hpp"

namespace spiderweb {

double gf_denominator(int b, int k, double q, double z) {
    return (1.0 - z) * (1.0 - b * q * z) - (b - 1) * z * (1.0 - q) * std::pow(q * z, k);
}

double gf_denominator_deriv(int b, int k, double q, double z) {
    return -(1.0 - b * q * z) - b * q * (1.0 - z) - (b - 1) * (1.0 - q) * (k + 1) * std::pow(q, k) * std::pow(z, k);
}

double gf_numerator(int b, int k, double q, double z) {
    return 1.0 - b * q * z + (b - 1) * std::pow(q * z, k + 1);
}

bool near_threshold(int b, double q) {
    return b * q - 1.0 < 0.05;
}

namespace {

struct NewtonResult {
    double z;
    int iters;
};

// Newton from x0, kept inside [lo, hi]. When a step leaves the interval we
// bisect if the tracked bracket straddles a sign change, else clamp.
// Tolerance 1e-14 on |dz/z|, at most 100 iterations, plus one polish step
// to park the residual at the machine floor.
NewtonResult newton_bracketed(int b, int k, double q, double x0, double lo, double hi) {
    double flo = gf_denominator(b, k, q, lo);
    double fhi = gf_denominator(b, k, q, hi);
    double x = x0;
    bool converged = false;
    int it = 0;
    for (; it < 100; ++it) {
        double f = gf_denominator(b, k, q, x);
        double fp = gf_denominator_deriv(b, k, q, x);
        double xn = (fp != 0.0) ? x - f / fp : lo - 1.0;
        if (!(xn >= lo && xn <= hi)) {
            if (flo * fhi < 0.0) {
                if (flo * f < 0.0) { hi = x; fhi = f; } else { lo = x; flo = f; }
                xn = 0.5 * (lo + hi);
            } else {
                xn = std::min(hi, std::max(lo, xn));
            }
        }
        if (std::abs(xn - x) <= 1e-14 * std::abs(xn)) {
            x = xn;
            converged = true;
            break;
        }
        x = xn;
    }
    if (!converged) throw RegimeError("denominator_roots: no convergence in 100 iterations");
    double fp = gf_denominator_deriv(b, k, q, x);
    if (fp != 0.0) x -= gf_denominator(b, k, q, x) / fp;
    return {x, it + 1};
}

double relative_residual(int b, int k, double q, double z) {
    // scale = evaluation magnitude of B at z: the subtracted terms cancel at a
    // root, so normalizing by their sum overstates the achievable accuracy
    double t1 = (1.0 + z) * (1.0 + b * q * z);
    double t2 = std::abs((b - 1) * z * (1.0 - q) * std::pow(q * z, k));
    double scale = t1 + t2;
    return std::abs(gf_denominator(b, k, q, z)) / scale;
}

} // namespace

RootPair denominator_roots(int b, int k, double q) {
    if (b < 2 || k < 1) throw std::invalid_argument("denominator_roots: need b >= 2, k >= 1");
    if (!(q > 1.0 / b && q < 1.0)) throw RegimeError("denominator_roots: need 1/b < q < 1");

    double qk2 = std::pow(q, 0.5 * k);
    NewtonResult r2 = newton_bracketed(b, k, q, 1.0, 1.0 - qk2, 1.0 + qk2);
    double z3hi = 1.0 / (b * q);
    double z3lo = z3hi * (1.0 - std::pow(static_cast<double>(b), -0.5 * k));
    NewtonResult r3 = newton_bracketed(b, k, q, z3hi, z3lo, z3hi);

    RootPair out;
    out.zeta2 = r2.z;
    out.zeta3 = r3.z;
    out.iters2 = r2.iters;
    out.iters3 = r3.iters;
    out.resid2 = relative_residual(b, k, q, r2.z);
    out.resid3 = relative_residual(b, k, q, r3.z);
    out.regime_warning = near_threshold(b, q);
    if (!(out.zeta3 > 0.0 && out.zeta3 < out.zeta2))
        throw RegimeError("denominator_roots: roots out of order; analysis regime invalid");
    return out;
}

ResidueTerms residue_terms(int b, int k, int l, double q) {
    if (l < k) throw RegimeError("residue_terms: need l >= k");
    RootPair roots = denominator_roots(b, k, q);
    ResidueTerms t;
    t.pole2 = -gf_numerator(b, k, q, roots.zeta2) /
              (gf_denominator_deriv(b, k, q, roots.zeta2) * std::pow(roots.zeta2, l + 1));
    t.pole3 = -gf_numerator(b, k, q, roots.zeta3) /
              (gf_denominator_deriv(b, k, q, roots.zeta3) * std::pow(roots.zeta3, l + 1));
    return t;
}

double residue_phi(int b, int k, int l, double q) {
    ResidueTerms t = residue_terms(b, k, l, q);
    return t.pole2 + t.pole3;
}

double phi_asymptotic(int b, int k, int l, double q) {
    if (b < 2 || k < 1 || l < k)
        throw std::invalid_argument("phi_asymptotic: need b >= 2, 1 <= k <= l");
    if (!(q < 1.0)) throw std::invalid_argument("phi_asymptotic: need q < 1");
    if (!(q > 1.0 / b))
        throw ThresholdError("phi_asymptotic: singular at q <= 1/b");
    double r = (b - 1) / (b * q - 1.0);
    return r * r * std::pow(static_cast<double>(b), l - k) * std::pow(q, l + 1) + 1.0;
}

} // namespace spiderweb
