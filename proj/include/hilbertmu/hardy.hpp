#pragma once

// Hardy-space machinery for polynomial data: integral means M_p(r, f),
// H^p norms by uniform circle sampling (FFT-evaluated), the mixed-norm
// B_q and Besov B^p integrals, dyadic coefficient blocks, and the two
// standard test families
//   f_b(z) = ((1-b^2)/(1-bz)^2)^(1/p)   unit H^p norm for every b, p
//   g_a(z) = log(2/(1-az))              coefficients log 2, a^k/k.
//
// Sampling note: with K uniform points and K >= 8 (degree+1) the mean of
// |f|^2 on a circle is exact (no aliasing), and for other p the sampling
// error decays geometrically in K; all defaults keep that margin.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hilbertmu/fft.hpp"
#include "hilbertmu/measure.hpp"
#include "hilbertmu/polynomial.hpp"
#include "hilbertmu/quadrature.hpp"

namespace hmu {

namespace detail {

// smallest admissible power-of-two sample count for a given degree
inline int circle_samples_for(int degree) {
    const std::size_t need = 8 * static_cast<std::size_t>(std::max(degree, 0) + 1);
    return static_cast<int>(next_pow2(std::max<std::size_t>(need, 8)));
}

// values f(r * w^k), w = exp(2 pi i / K), via one length-K transform
inline std::vector<std::complex<double>> circle_values(const Polynomial& f, double r, int K) {
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(K), 0.0);
    double rj = 1.0;
    for (std::size_t j = 0; j < f.coeffs.size() && j < buf.size(); ++j) {
        buf[j] = f.coeffs[j] * rj;
        rj *= r;
    }
    fft_inplace(buf, +1);
    return buf;
}

}  // namespace detail

// M_p(r, f) = (mean of |f|^p over K uniform points on the circle of
// radius r)^(1/p).  K must be a power of two with K >= 8 (degree+1).
inline double integral_means(const Polynomial& f, double r, double p, int K) {
    if (!(p > 0.0)) throw std::invalid_argument("integral_means: p must be positive");
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("integral_means: r must lie in [0, 1]");
    if (K < detail::circle_samples_for(f.degree()) || (K & (K - 1)) != 0)
        throw std::invalid_argument("integral_means: K must be a power of two with K >= 8 (degree+1)");
    const auto vals = detail::circle_values(f, r, K);
    double acc = 0.0;
    for (const auto& v : vals) acc += std::pow(std::abs(v), p);
    return std::pow(acc / K, 1.0 / p);
}

inline double integral_means(const Polynomial& f, double r, double p) {
    return integral_means(f, r, p, detail::circle_samples_for(f.degree()));
}

// H^p (quasi-)norm: the boundary integral mean M_p(1, f).
inline double hp_norm(const Polynomial& f, double p) {
    return integral_means(f, 1.0, p);
}

struct RadialProfile {
    std::vector<double> r;
    std::vector<double> mean;  // M_p(r_j, f)
};

inline RadialProfile radial_profile(const Polynomial& f, double p, const std::vector<double>& rs) {
    RadialProfile prof;
    prof.r = rs;
    prof.mean.reserve(rs.size());
    const int K = detail::circle_samples_for(f.degree());
    for (double r : rs) prof.mean.push_back(integral_means(f, r, p, K));
    return prof;
}

// Mixed-norm functional for 0 < q < 1:
//   ||f||_{B_q} = integral_0^1 (1-r)^(1/q - 2) M_1(r, f) dr,
// computed in u = -log(1-r) coordinates where the weight decays like
// exp(-(1/q - 1) u).
inline double bq_norm(const Polynomial& f, double q, const QuadratureSpec& spec = {}) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("bq_norm: q must lie in (0, 1)");
    const double rate = 1.0 / q - 1.0;
    const int K = detail::circle_samples_for(f.degree());
    auto integrand = [&](double u) {
        const double r = -std::expm1(-u);
        return std::exp(-rate * u) * integral_means(f, r, 1.0, K);
    };
    const double u_hi = 40.0 / rate + 5.0;
    return integrate_panels(integrand, 0.0, u_hi, spec).value;
}

// Besov integral for p > 1, returned as the p-th power:
//   ||g||^p = |g(0)|^p + integral_D |g'(z)|^p (1 - |z|^2)^(p-2) dA(z)
// with unnormalized area measure (so g = z, p = 2 gives pi).
inline double besov_norm(const Polynomial& g, double p, const QuadratureSpec& spec = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("besov_norm: p must exceed 1");
    const Polynomial dg = derivative(g);
    if (dg.degree() < 0) return std::pow(std::abs(g.coeffs[0]), p);
    const int K = detail::circle_samples_for(dg.degree());
    auto integrand = [&](double u) {
        const double r = -std::expm1(-u);
        const double mean_p = std::pow(integral_means(dg, r, p, K), p);
        // r (1-r^2)^(p-2) dr = r ((1-r)(1+r))^(p-2) e^{-u} du
        const double w = std::pow((1.0 - r) * (1.0 + r), p - 2.0) * std::exp(-u);
        return 2.0 * M_PI * r * mean_p * w;
    };
    const double rate = p - 1.0;
    const double u_hi = 40.0 / rate + 5.0;
    const double area = integrate_panels(integrand, 0.0, u_hi, spec).value;
    return std::pow(std::abs(g.coeffs[0]), p) + area;
}

// Partial sum of the dyadic block decomposition
//   sum_n 2^{-n(p-1)} || sum_{k=2^n}^{2^{n+1}-1} k mu_{k+1} z^{k-1} ||_{H^p}^p
// for n = 0..nmax; needs moments through index 2^{nmax+1}.
inline double dyadic_block_besov(const MomentSequence& ms, double p, int nmax) {
    if (!(p > 1.0)) throw std::invalid_argument("dyadic_block_besov: p must exceed 1");
    if (nmax < 0) throw std::invalid_argument("dyadic_block_besov: nmax must be nonnegative");
    const std::size_t need = (std::size_t{1} << (nmax + 1)) + 1;
    if (ms.values.size() < need)
        throw std::invalid_argument("dyadic_block_besov: moment sequence too short for nmax");
    double total = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const std::size_t k_lo = std::size_t{1} << n;
        const std::size_t k_hi = (std::size_t{1} << (n + 1)) - 1;
        std::vector<std::complex<double>> block(k_hi, 0.0);  // degree k_hi - 1
        for (std::size_t k = k_lo; k <= k_hi; ++k)
            block[k - 1] = static_cast<double>(k) * ms.values[k + 1];
        const double norm = hp_norm(Polynomial(std::move(block)), p);
        total += std::pow(2.0, -static_cast<double>(n) * (p - 1.0)) * std::pow(norm, p);
    }
    return total;
}

// Taylor coefficients of f_b through degree D; with D <= 0 the degree is
// chosen so both the tail at radius (1+b)/2 and the coefficient-l2 tail
// at the boundary are negligible for norm evaluation.
inline Polynomial test_fb(double b, double p, int D = 0) {
    if (!(b >= 0.0 && b < 1.0)) throw std::invalid_argument("test_fb: b must lie in [0, 1)");
    if (!(p > 0.0)) throw std::invalid_argument("test_fb: p must be positive");
    const double beta = 2.0 / p;
    const double head = std::pow(1.0 - b * b, 1.0 / p);
    if (b == 0.0) return Polynomial(std::vector<std::complex<double>>{head});
    const double rho = 0.5 * (1.0 + b);
    std::vector<std::complex<double>> c;
    c.reserve(D > 0 ? D + 1 : 1024);
    double ck = head;
    double ck_rho = head;  // c_k * rho^k
    for (int k = 0;; ++k) {
        c.push_back(ck);
        if (D > 0 && k >= D) break;
        if (D <= 0 && k > beta / (1.0 - b) && ck_rho <= 1e-11 && ck <= 1e-14) break;
        if (k > 400000) throw std::invalid_argument("test_fb: b too close to 1 for coefficient expansion");
        const double ratio = b * (beta + k) / (k + 1.0);
        ck *= ratio;
        ck_rho *= ratio * rho;
    }
    return Polynomial(std::move(c));
}

// Taylor coefficients of g_a = log(2/(1-az)): log 2, a, a^2/2, a^3/3, ...
inline Polynomial test_ga(double a, int D = 0) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("test_ga: a must lie in [0, 1)");
    std::vector<std::complex<double>> c{std::log(2.0)};
    if (a > 0.0) {
        double ak = 1.0;
        for (int k = 1;; ++k) {
            ak *= a;
            c.push_back(ak / k);
            if (D > 0 && k >= D) break;
            if (D <= 0 && ak / ((k + 1.0) * (1.0 - a)) < 1e-15) break;
            if (k > 400000) throw std::invalid_argument("test_ga: a too close to 1 for coefficient expansion");
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace hmu
