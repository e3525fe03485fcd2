#include "spiderweb/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spiderweb/asymptotics.hpp"

namespace spiderweb {

namespace {

void check_args(const NetworkParams& p, double q) {
    p.validate();
    if (p.l < p.k)
        throw std::invalid_argument("moments: require l >= k");
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("moments: require 0 < q <= 1");
}

BigRat rat_pow(const BigRat& x, int n) {
    BigRat r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

double expected_paths(const NetworkParams& p, double q) {
    check_args(p, q);
    return std::pow(static_cast<double>(p.b), p.l - p.k) * std::pow(q, p.l - 1);
}

double second_moment(const NetworkParams& p, double q) {
    return expected_paths(p, q) * phi_eval(p.b, p.k, p.l, q);
}

double second_moment_asymptotic(const NetworkParams& p, double q) {
    check_args(p, q);
    return expected_paths(p, q) * phi_asymptotic(p.b, p.k, p.l, q);
}

double markov_upper_bound(const NetworkParams& p, double q) {
    return std::min(1.0, expected_paths(p, q));
}

double chebyshev_lower_bound(const NetworkParams& p, double q) {
    // Ex[X]^2 / Ex[X^2] = Ex[X] / phi_l(q); phi_l(q) >= Ex[X] always, so the
    // value sits in [0, 1] up to rounding. Out-of-range means a real bug.
    double v = expected_paths(p, q) / phi_eval(p.b, p.k, p.l, q);
    SPIDERWEB_ASSERT(v >= 0.0 && v <= 1.0, "chebyshev bound outside [0,1]");
    return v;
}

double critical_ratio_limit(int b, double q) {
    if (b < 2) throw std::invalid_argument("critical_ratio_limit: require b >= 2");
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("critical_ratio_limit: require 0 < q <= 1");
    double e = b * q - 1.0;
    if (!(e > 0.0))
        throw RegimeError("critical_ratio_limit: requires bq > 1");
    double bm = static_cast<double>(b) - 1.0;
    return e * e / (bm * bm * q * q + e * e * q);
}

BigRat expected_paths_exact(const NetworkParams& p, const BigRat& q) {
    p.validate();
    if (p.l < p.k)
        throw std::invalid_argument("moments: require l >= k");
    if (!(q > 0 && q <= 1))
        throw std::invalid_argument("moments: require 0 < q <= 1");
    BigRat r(boost::multiprecision::pow(BigInt(p.b), static_cast<unsigned>(p.l - p.k)));
    return r * rat_pow(q, p.l - 1);
}

BigRat second_moment_exact(const NetworkParams& p, const BigRat& q) {
    return expected_paths_exact(p, q) * phi_poly(p.b, p.k, p.l).eval_exact(q);
}

namespace {

// Label index of each interior vertex of each path from the all-zeros input
// to the all-zeros output.
std::vector<std::vector<std::uint64_t>> interior_profiles(const NetworkParams& p,
                                                          std::uint64_t cap) {
    VertexId v{0, zeros_label(p)};
    VertexId w{p.l, zeros_label(p)};
    auto paths = enumerate_paths(p, v, w, cap);
    if (!paths.empty() && paths.size() > cap / paths.size())
        throw CapError("brute_second_moment: path pair count exceeds cap");
    std::vector<std::vector<std::uint64_t>> prof;
    prof.reserve(paths.size());
    for (const auto& t : paths) {
        std::vector<std::uint64_t> row;
        row.reserve(p.l - 1);
        for (int m = 1; m <= p.l - 1; ++m)
            row.push_back(label_to_index(p, path_vertex(p, t, m).label));
        prof.push_back(std::move(row));
    }
    return prof;
}

int shared_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) ++s;
    return s;
}

}  // namespace

double brute_second_moment(const NetworkParams& p, double q, std::uint64_t cap) {
    check_args(p, q);
    auto prof = interior_profiles(p, cap);
    std::vector<double> qpow(2 * p.l, 1.0);
    for (std::size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * q;
    double total = 0.0;
    for (const auto& a : prof)
        for (const auto& b : prof)
            total += qpow[2 * (p.l - 1) - shared_count(a, b)];
    return total;
}

BigRat brute_second_moment_exact(const NetworkParams& p, const BigRat& q, std::uint64_t cap) {
    p.validate();
    if (p.l < p.k)
        throw std::invalid_argument("moments: require l >= k");
    if (!(q > 0 && q <= 1))
        throw std::invalid_argument("moments: require 0 < q <= 1");
    auto prof = interior_profiles(p, cap);
    std::vector<BigRat> qpow(2 * p.l, BigRat(1));
    for (std::size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * q;
    BigRat total(0);
    for (const auto& a : prof)
        for (const auto& b : prof)
            total += qpow[2 * (p.l - 1) - shared_count(a, b)];
    return total;
}

MomentReport moment_report(const NetworkParams& p, double q) {
    MomentReport r;
    r.ex_x = expected_paths(p, q);
    r.ex_x2_exact = second_moment(p, q);
    try {
        r.ex_x2_asymptotic = second_moment_asymptotic(p, q);
    } catch (const RegimeError&) {
        r.ex_x2_asymptotic = std::numeric_limits<double>::quiet_NaN();
    }
    r.markov_upper = markov_upper_bound(p, q);
    r.chebyshev_lower = chebyshev_lower_bound(p, q);
    return r;
}

}  // namespace spiderweb
