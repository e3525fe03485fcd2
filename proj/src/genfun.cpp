#include "spiderweb/genfun.hpp"

#include <sstream>
#include <stdexcept>

namespace spiderweb {

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    return c[static_cast<std::size_t>(i)];
}

double IntPoly::eval(double y) const {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i].convert_to<double>();
    return acc;
}

BigRat IntPoly::eval_exact(const BigRat& y) const {
    BigRat acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + BigRat(c[i]);
    return acc;
}

BigInt IntPoly::coeff_sum() const {
    BigInt s = 0;
    for (const auto& x : c) s += x;
    return s;
}

std::string IntPoly::pretty() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        BigInt a = c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

static IntPoly monomial(int power, const BigInt& coeff) {
    IntPoly p;
    p.c.assign(static_cast<std::size_t>(power) + 1, 0);
    p.c.back() = coeff;
    return p;
}

RationalGF build_gf(int b, int k) {
    if (b < 2) throw std::invalid_argument("build_gf: b must be >= 2");
    if (k < 1) throw std::invalid_argument("build_gf: k must be >= 1");
    RationalGF gf;
    gf.b = b;
    gf.k = k;
    gf.A.assign(static_cast<std::size_t>(k) + 2, IntPoly{});
    gf.B.assign(static_cast<std::size_t>(k) + 2, IntPoly{});

    // A(z) = 1 - byz + (b-1)(yz)^{k+1}
    gf.A[0] = monomial(0, 1);
    gf.A[1] = monomial(1, -b);
    gf.A[static_cast<std::size_t>(k) + 1] =
        poly_add(gf.A[static_cast<std::size_t>(k) + 1], monomial(k + 1, b - 1));

    // B(z) = 1 - (1+by)z + byz^2 - (b-1)(y^k - y^{k+1})z^{k+1}
    gf.B[0] = monomial(0, 1);
    gf.B[1] = poly_sub(monomial(0, -1), monomial(1, b));
    gf.B[2] = monomial(1, b);
    gf.B[static_cast<std::size_t>(k) + 1] = poly_add(
        gf.B[static_cast<std::size_t>(k) + 1],
        poly_sub(monomial(k + 1, b - 1), monomial(k, b - 1)));
    for (auto& p : gf.A) p.normalize();
    for (auto& p : gf.B) p.normalize();
    return gf;
}

std::vector<IntPoly> phi_polys_upto(int b, int k, int l) {
    RationalGF gf = build_gf(b, k);
    std::vector<IntPoly> phi;
    phi.reserve(static_cast<std::size_t>(l) + 1);
    for (int m = 0; m <= l; ++m) {
        IntPoly next = (m < static_cast<int>(gf.A.size())) ? gf.A[static_cast<std::size_t>(m)] : IntPoly{};
        int jmax = std::min<int>(m, static_cast<int>(gf.B.size()) - 1);
        for (int j = 1; j <= jmax; ++j)
            next = poly_sub(next, poly_mul(gf.B[static_cast<std::size_t>(j)], phi[static_cast<std::size_t>(m - j)]));
        phi.push_back(std::move(next));
    }
    return phi;
}

IntPoly phi_poly(int b, int k, int l) {
    if (l < 0) throw std::invalid_argument("phi_poly: l must be >= 0");
    return phi_polys_upto(b, k, l).back();
}

std::vector<double> psi_series(int b, int k, double y, int n) {
    if (n < 0) throw std::invalid_argument("psi_series: n must be >= 0");
    RationalGF gf = build_gf(b, k);
    std::vector<double> alpha(gf.A.size()), beta(gf.B.size());
    for (std::size_t i = 0; i < gf.A.size(); ++i) alpha[i] = gf.A[i].eval(y);
    for (std::size_t i = 0; i < gf.B.size(); ++i) beta[i] = gf.B[i].eval(y);

    std::vector<double> phi;
    phi.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        double next = (m < static_cast<int>(alpha.size())) ? alpha[static_cast<std::size_t>(m)] : 0.0;
        int jmax = std::min<int>(m, static_cast<int>(beta.size()) - 1);
        for (int j = 1; j <= jmax; ++j) next -= beta[static_cast<std::size_t>(j)] * phi[static_cast<std::size_t>(m - j)];
        phi.push_back(next);
    }
    return phi;
}

double phi_eval(int b, int k, int l, double q) {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("phi_eval: need 0 < q <= 1");
    return psi_series(b, k, q, l).back();
}

IntPoly brute_phi(int b, int k, int l, std::uint64_t cap) {
    NetworkParams p{b, k, l};
    VertexId v{0, zeros_label(p)};
    VertexId w{l, zeros_label(p)};
    auto paths = enumerate_paths(p, v, w, cap);
    IntPoly tally;
    tally.c.assign(static_cast<std::size_t>(std::max(l, 1)), 0);
    const std::string zeros = zeros_label(p);
    for (const auto& path : paths) {
        int nonzero = 0;
        for (int m = 1; m <= l - 1; ++m)
            if (path_vertex(p, path, m).label != zeros) ++nonzero;
        tally.c[static_cast<std::size_t>(nonzero)] += 1;
    }
    tally.normalize();
    return tally;
}

std::vector<std::string> poly_to_decimal_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const auto& x : p.c) out.push_back(x.str());
    return out;
}

} // namespace spiderweb
