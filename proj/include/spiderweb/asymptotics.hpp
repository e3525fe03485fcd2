#pragma once

// Numeric pole analysis of psi(q,z) = A(z)/B(z): the two real roots of B
// near 1 and 1/(bq), and the two-pole residue approximation of phi_l(q).

namespace spiderweb {

struct RootPair {
    double zeta2 = 0.0; // perturbation of 1, zeta2 > 1
    double zeta3 = 0.0; // perturbation of 1/(bq), zeta3 < 1/(bq)
    int iters2 = 0;
    int iters3 = 0;
    double resid2 = 0.0; // |B(zeta)| relative to the term magnitudes
    double resid3 = 0.0;
    bool regime_warning = false; // bq - 1 < 0.05: constants blow up near threshold
};

// B and its derivative at y = q.
double gf_denominator(int b, int k, double q, double z);
double gf_denominator_deriv(int b, int k, double q, double z);
double gf_numerator(int b, int k, double q, double z);

// Bracketed Newton for the two roots; requires 1/b < q < 1, k >= 1.
// Throws RegimeError on non-convergence or if the roots come out unordered.
RootPair denominator_roots(int b, int k, double q);

struct ResidueTerms {
    double pole2 = 0.0; // -A(z2)/(B'(z2) z2^{l+1}), tends to 1
    double pole3 = 0.0; // -A(z3)/(B'(z3) z3^{l+1}), the growing term
};

ResidueTerms residue_terms(int b, int k, int l, double q);

// Two-pole approximation of phi_l(q); the neglected contour remainder is
// O(l q^l). Requires l >= k.
double residue_phi(int b, int k, int l, double q);

// Closed-form leading terms ((b-1)/(bq-1))^2 b^{l-k} q^{l+1} + 1.
double phi_asymptotic(int b, int k, int l, double q);

// bq - 1 < 0.05, where the expansion constants degrade.
bool near_threshold(int b, double q);

} // namespace spiderweb
