#include "spiderweb/limits.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spiderweb/genfun.hpp"

namespace spiderweb {

namespace {

void check_bq(int b, double q) {
    if (b < 2) throw std::invalid_argument("limits: require b >= 2");
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("limits: require 0 < q <= 1");
}

// f(x) = (1 - q(1-x))^b - x; fixed points of the offspring pgf.
double fp_fun(int b, double q, double x) {
    return std::pow(1.0 - q * (1.0 - x), b) - x;
}

double fp_deriv(int b, double q, double x) {
    return static_cast<double>(b) * q * std::pow(1.0 - q * (1.0 - x), b - 1) - 1.0;
}

}  // namespace

double critical_vacancy(int b, double c) {
    if (b < 2) throw std::invalid_argument("critical_vacancy: require b >= 2");
    if (!(c >= 1.0)) throw std::invalid_argument("critical_vacancy: require c >= 1");
    return std::pow(static_cast<double>(b), -(c - 1.0) / c);
}

double fixed_point_xi(int b, double q) {
    check_bq(b, q);
    if (!(b * q > 1.0))
        throw RegimeError("fixed_point_xi: requires bq > 1");
    double lo = 0.0, hi = 1.0 - 1e-9;
    double flo = fp_fun(b, q, lo);
    if (flo == 0.0) return 0.0;
    double fhi = fp_fun(b, q, hi);
    // f(0) = (1-q)^b > 0 and f(1-eps) ~ -(bq-1)eps < 0 for bq > 1.
    SPIDERWEB_ASSERT(flo > 0.0 && fhi < 0.0, "fixed point bracket failed");
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        if (fp_fun(b, q, mid) > 0.0) lo = mid; else hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        double d = fp_deriv(b, q, x);
        if (d == 0.0) break;
        x -= fp_fun(b, q, x) / d;
    }
    if (x < 0.0) x = 0.0;
    SPIDERWEB_ASSERT(std::abs(fp_fun(b, q, x)) <= 1e-14, "fixed point residual too large");
    return x;
}

double limiting_Q(int b, double q, double c) {
    check_bq(b, q);
    double qc = critical_vacancy(b, c);
    if (q == qc)
        throw ThresholdError("limiting_Q: q equals the critical vacancy exactly");
    if (q < qc) return 0.0;
    double xi = fixed_point_xi(b, q);
    return (1.0 - xi) * (1.0 - xi);
}

double eta(int b, double q) {
    double xi = fixed_point_xi(b, q);
    return static_cast<double>(b) * std::pow(1.0 - q * (1.0 - xi), b - 1);
}

double alpha_exponent(int b, double q) {
    double e = eta(b, q);
    if (!(e < 1.0))
        throw RegimeError("alpha_exponent: requires eta < 1");
    return std::log(1.0 / e) / std::log(b * q);
}

std::vector<double> branching_extinction_seq(int b, double q, int r) {
    check_bq(b, q);
    if (r < 0) throw std::invalid_argument("branching_extinction_seq: require r >= 0");
    std::vector<double> seq;
    seq.reserve(r + 1);
    double p = 0.0;
    seq.push_back(p);
    for (int i = 0; i < r; ++i) {
        p = std::pow(1.0 - q * (1.0 - p), b);
        seq.push_back(p);
    }
    return seq;
}

double q_star(int b, double q, double c) {
    check_bq(b, q);
    if (!(c > 2.0))
        throw RegimeError("q_star: requires c > 2");
    double qs = std::pow(static_cast<double>(b), -(c - 2.0) / (c - 1.0)) *
                std::pow(q, 1.0 / ((c - 1.0) * (c - 1.0)));
    if (!(qs < q))
        throw RegimeError("q_star: depressed vacancy not below q");
    if (!(qs < critical_vacancy(b, c - 1.0)))
        throw RegimeError("q_star: depressed vacancy not below the ratio-(c-1) threshold");
    return qs;
}

long long H_threshold(int b, double q, double c, int k) {
    if (k < 1) throw std::invalid_argument("H_threshold: require k >= 1");
    double qs = q_star(b, q, c);
    return static_cast<long long>(std::ceil(std::pow(b * qs, k / 2)));
}

Lemma36Result lemma36_check(int b, int k, double c, double q) {
    double qs = q_star(b, q, c);
    int l = static_cast<int>(std::lround(c * k));
    if (l < k) throw std::invalid_argument("lemma36_check: require round(c*k) >= k");
    auto phis = psi_series(b, k, qs, l - k);
    Lemma36Result r;
    r.max_phi = phis[0];
    r.argmax = 0;
    for (int h = 1; h < static_cast<int>(phis.size()); ++h) {
        if (phis[h] > r.max_phi) {
            r.max_phi = phis[h];
            r.argmax = h;
        }
    }
    r.holds = r.max_phi <= static_cast<double>(k);
    return r;
}

ThresholdReport limits_report(int b, double q, double c) {
    check_bq(b, q);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ThresholdReport rep;
    rep.b = b;
    rep.c = c;
    rep.q = q;
    rep.q_c = critical_vacancy(b, c);
    rep.q_limit = limiting_Q(b, q, c);
    rep.xi = nan;
    rep.eta = nan;
    rep.alpha = nan;
    rep.q_star = nan;
    if (b * q > 1.0) {
        rep.xi = fixed_point_xi(b, q);
        rep.eta = static_cast<double>(b) * std::pow(1.0 - q * (1.0 - rep.xi), b - 1);
        if (rep.eta < 1.0) {
            rep.alpha = std::log(1.0 / rep.eta) / std::log(b * q);
            rep.has_alpha = true;
        }
    }
    if (c > 2.0) {
        try {
            rep.q_star = q_star(b, q, c);
            rep.has_q_star = true;
        } catch (const RegimeError&) {
            // leave unset; the depressed-vacancy chain is out of regime
        }
    }
    return rep;
}

}  // namespace spiderweb
