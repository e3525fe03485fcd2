#pragma once

// Path-intersection polynomials phi_l(y) and their rational generating
// function psi(y,z) = A(z)/B(z) with
//   A(z) = 1 - byz + (b-1)(yz)^{k+1}
//   B(z) = (1-z)(1-byz) - (b-1)z(1-y)(yz)^k.
// The coefficient of y^m in phi_l(y) counts the paths 0^k -> 0^k of depth l
// having exactly m links labelled differently from 0^k.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spiderweb/netgraph.hpp"

namespace spiderweb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense polynomial in y with exact integer coefficients, index = power.
struct IntPoly {
    std::vector<BigInt> c;

    void normalize(); // trim trailing zeros
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const BigInt& coeff(int i) const;
    double eval(double y) const;
    BigRat eval_exact(const BigRat& y) const;
    BigInt coeff_sum() const;
    std::string pretty() const; // "1 + 2y + y^2"

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// psi(y,z) as z-coefficient lists: A[j] and B[j] are the IntPoly in y
// multiplying z^j. B[0] = 1 always.
struct RationalGF {
    int b = 2;
    int k = 1;
    std::vector<IntPoly> A;
    std::vector<IntPoly> B;
};

RationalGF build_gf(int b, int k); // requires b >= 2, k >= 1

// Exact phi_l(y) by series division of A by B:
//   phi_l = alpha_l - sum_{j>=1} beta_j phi_{l-j}.
IntPoly phi_poly(int b, int k, int l);

// phi_0..phi_l in one sweep (shares the recurrence work).
std::vector<IntPoly> phi_polys_upto(int b, int k, int l);

// Same recurrence in floating point with y := q.
double phi_eval(int b, int k, int l, double q);

// phi_0(y)..phi_n(y) evaluated at real y.
std::vector<double> psi_series(int b, int k, double y, int n);

// Brute-force oracle: enumerate paths 0^k -> 0^k and tally links with
// nonzero labels.
IntPoly brute_phi(int b, int k, int l, std::uint64_t cap = default_enum_cap());

// JSON-friendly form: decimal strings, index = power of y.
std::vector<std::string> poly_to_decimal_strings(const IntPoly& p);

} // namespace spiderweb
