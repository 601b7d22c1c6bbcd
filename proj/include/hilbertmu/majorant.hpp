#pragma once

// Nonnegative-coefficient majorant with the inner factor divided out.
//
// For a polynomial f = sum a_k z^k let G = sum |a_k| z^k.  Then
// |f(r)| <= G(r) on (0,1) and ||G||_{H^2} = ||f||_{H^2}.  Dividing G by
// the Blaschke product B over its zeros strictly inside the disc (origin
// order included) leaves F = G/B with
//   - F zero-free in the open disc (zeros within 1e-9 of the unit
//     circle are left untouched and stay in F),
//   - F(r) >= G(r) >= |f(r)| > 0 on (0,1), since 0 < B <= 1 there,
//   - |F| = |G| on the circle, so every H^p norm of G survives; at
//     p = 2 this gives ||F||_{H^2} = ||f||_{H^2} exactly by Parseval.
// G has no zeros on (0,1) and its complex zeros pair up by conjugation,
// which keeps B real on the real axis; a single sign fixes orientation.
//
// F is evaluated pointwise as G/B and never re-expanded.  Zeros come
// from the companion matrix (degree capped at 64) plus a Newton polish;
// a scaled residual above 1e-8 aborts with the residual attached.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hilbertmu/hardy.hpp"
#include "hilbertmu/polynomial.hpp"

namespace hmu {

inline constexpr int kMajorantDegreeCap = 64;
inline constexpr double kBoundaryZeroTol = 1e-9;
inline constexpr double kRootResidualGate = 1e-8;

class MajorantError : public std::runtime_error {
public:
    MajorantError(const std::string& what, double residual)
        : std::runtime_error(what), worst_residual(residual) {}
    double worst_residual;
};

struct BlaschkeFactorization {
    int origin_order = 0;
    std::vector<std::complex<double>> disc_zeros;      // |z| < 1 - 1e-9, conjugation-closed
    std::vector<std::complex<double>> boundary_zeros;  // within 1e-9 of the unit circle
    Polynomial outer;                                  // leading coeff times (z - z_i) over the rest
    double max_root_residual = 0.0;
};

namespace detail {

// all roots of a polynomial with real coefficients (degree >= 1)
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];

    // two Newton steps tighten each eigenvalue into a proper root
    for (auto& z : roots) {
        for (int it = 0; it < 2; ++it) {
            std::complex<double> val = 0.0, der = 0.0;
            for (int k = d; k >= 0; --k) {
                der = der * z + val;
                val = val * z + c[k];
            }
            if (std::abs(der) < 1e-300) break;
            z -= val / der;
        }
    }
    return roots;
}

inline double scaled_residual(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> val = 0.0;
    double scale = 0.0;
    const double az = std::abs(z);
    double azk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        scale += std::abs(c[k]) * azk;
        azk *= az;
    }
    for (std::size_t k = c.size(); k-- > 0;) val = val * z + c[k];
    return std::abs(val) / std::max(scale, 1e-300);
}

}  // namespace detail

// Zero set of a polynomial with nonnegative real coefficients, split by
// location relative to the unit circle.  The reconstruction
// z^m * prod_{disc}(z - z_i) * outer recovers the input.
inline BlaschkeFactorization factorize_zeros(const Polynomial& g) {
    const int deg = g.degree();
    if (deg < 0) throw std::invalid_argument("factorize_zeros: zero polynomial");
    if (deg > kMajorantDegreeCap)
        throw std::invalid_argument("factorize_zeros: degree exceeds the supported cap of 64");

    BlaschkeFactorization fac;
    std::size_t m = 0;
    while (m < g.coeffs.size() && g.coeffs[m] == std::complex<double>(0.0)) ++m;
    fac.origin_order = static_cast<int>(m);

    std::vector<double> c(deg + 1 - fac.origin_order);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& ck = g.coeffs[k + m];
        if (std::abs(ck.imag()) > 1e-14 * (1.0 + std::abs(ck.real())) || ck.real() < 0.0)
            throw std::invalid_argument("factorize_zeros: coefficients must be real and nonnegative");
        c[k] = ck.real();
    }

    Polynomial outer(std::vector<std::complex<double>>{c.back()});
    if (c.size() > 1) {
        const auto roots = detail::poly_roots(c);
        for (const auto& z : roots)
            fac.max_root_residual = std::max(fac.max_root_residual, detail::scaled_residual(c, z));
        if (fac.max_root_residual > kRootResidualGate)
            throw MajorantError("factorize_zeros: root residual above gate", fac.max_root_residual);
        for (const auto& z : roots) {
            const double az = std::abs(z);
            if (az < 1.0 - kBoundaryZeroTol) {
                fac.disc_zeros.push_back(z);
            } else {
                if (az <= 1.0 + kBoundaryZeroTol) fac.boundary_zeros.push_back(z);
                outer = multiply(outer, Polynomial(std::vector<std::complex<double>>{-z, 1.0}));
            }
        }
    }
    fac.outer = std::move(outer);
    return fac;
}

// F = G/B evaluated pointwise; holds G with the origin zeros divided out
// so z = 0 needs no special handling.
struct MajorantFunction {
    Polynomial g_shifted;  // G(z) / z^m
    std::vector<std::complex<double>> disc_zeros;
    int origin_order = 0;
    double sign = 1.0;  // orients B so that B > 0 on (0, 1)

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> val = g_shifted(z);
        for (const auto& w : disc_zeros) val *= (1.0 - std::conj(w) * z) / (w - z);
        return val / sign;
    }

    double eval_real(double r) const { return (*this)(std::complex<double>(r, 0.0)).real(); }

    // boundary integral mean of the evaluated majorant
    double hp_norm(double p) const {
        const int K = detail::circle_samples_for(
            g_shifted.degree() + origin_order + static_cast<int>(disc_zeros.size()));
        double acc = 0.0;
        for (int k = 0; k < K; ++k) {
            const auto z = std::polar(1.0, 2.0 * M_PI * k / K);
            acc += std::pow(std::abs((*this)(z)), p);
        }
        return std::pow(acc / K, 1.0 / p);
    }
};

struct MajorantResult {
    MajorantFunction F;
    BlaschkeFactorization factorization;  // of the abs-coefficient majorant G
    double input_norm = 0.0;              // ||f||_{H^p} for the requested p
    double majorant_norm = 0.0;           // ||F||_{H^p}; equals input_norm when p = 2
};

inline MajorantResult majorant(const Polynomial& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("majorant: p must be positive");
    if (f.degree() < 0) throw std::invalid_argument("majorant: zero polynomial");

    std::vector<std::complex<double>> abs_coeffs(f.coeffs.size());
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) abs_coeffs[k] = std::abs(f.coeffs[k]);
    const Polynomial g(std::move(abs_coeffs));

    MajorantResult res;
    res.factorization = factorize_zeros(g);

    res.F.origin_order = res.factorization.origin_order;
    res.F.disc_zeros = res.factorization.disc_zeros;
    res.F.g_shifted = Polynomial(std::vector<std::complex<double>>(
        g.coeffs.begin() + res.factorization.origin_order, g.coeffs.end()));

    // B is real with constant sign on (0,1); sample it once to orient F
    std::complex<double> b_half = 1.0;
    for (const auto& w : res.F.disc_zeros) b_half *= (w - 0.5) / (1.0 - std::conj(w) * 0.5);
    res.F.sign = (b_half.real() < 0.0) ? -1.0 : 1.0;

    res.input_norm = hp_norm(f, p);
    res.majorant_norm = res.F.hp_norm(p);
    return res;
}

}  // namespace hmu
