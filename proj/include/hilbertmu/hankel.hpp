#pragma once

// Finite sections of the moment Hankel operator and its integral twin.
//
// For a measure mu with moments mu_n, the operator sends Taylor
// coefficients a = (a_k) to b_n = sum_k mu_{n+k} a_k.  The N x N
// truncation is applied two ways:
//   naive   direct O(N^2) summation (the reference path)
//   fast    Hankel x a = Toeplitz x reverse(a), embedded in a circulant
//           of power-of-two length >= 2N-1 and done with three FFTs
// The integral twin evaluates integral f(t) / (1 - t z) d mu(t), which
// the coefficient route must reproduce inside the disc; agreement_check
// measures the worst relative gap over a z-grid.
//
// The truncation is immutable after construction (the circulant spectrum
// is precomputed there) and safe to share across threads; applications
// allocate their own scratch.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbertmu/fft.hpp"
#include "hilbertmu/hardy.hpp"
#include "hilbertmu/measure.hpp"
#include "hilbertmu/polynomial.hpp"
#include "hilbertmu/quadrature.hpp"

namespace hmu {

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate)
        : std::runtime_error(what), last_estimate(estimate) {}
    double last_estimate;
};

struct HankelTruncation {
    int N = 0;
    std::vector<double> moments;  // mu_0 .. mu_{2N-2}

    HankelTruncation(const MomentSequence& ms, int n) : N(n) {
        if (n < 1) throw std::invalid_argument("hankel: N must be positive");
        if (ms.values.size() < static_cast<std::size_t>(2 * n - 1))
            throw std::invalid_argument("hankel: moment sequence shorter than 2N-1");
        moments.assign(ms.values.begin(), ms.values.begin() + (2 * n - 1));
        const double slack = ms.error_bound + 1e-14 * std::abs(moments[0]);
        for (std::size_t i = 0; i < moments.size(); ++i) {
            if (moments[i] < -slack)
                throw std::invalid_argument("hankel: moments must be nonnegative");
            if (i > 0 && moments[i] > moments[i - 1] + slack)
                throw std::invalid_argument("hankel: moments must be nonincreasing");
        }
        build_plan();
    }

    HankelTruncation(const Measure& mu, int n, const QuadratureSpec& spec = {})
        : HankelTruncation(moments_up_to(mu, n < 1 ? 0 : 2 * n - 2, spec), n) {}

    double entry(int row, int col) const { return moments[row + col]; }

    // circulant spectrum for the fast path
    std::size_t fft_len = 1;
    std::vector<std::complex<double>> c_hat;

private:
    void build_plan() {
        fft_len = detail::next_pow2(static_cast<std::size_t>(2 * N - 1));
        std::vector<std::complex<double>> c(fft_len, 0.0);
        for (int i = 0; i < N; ++i) c[i] = moments[N - 1 + i];
        for (int i = 1; i < N; ++i) c[fft_len - i] = moments[N - 1 - i];
        detail::fft_inplace(c, -1);
        c_hat = std::move(c);
    }
};

namespace detail {
inline void check_apply_input(const HankelTruncation& T,
                              const std::vector<std::complex<double>>& a) {
    if (a.size() > static_cast<std::size_t>(T.N))
        throw std::invalid_argument("hankel apply: input longer than the truncation size");
}
}  // namespace detail

// reference O(N^2) application
inline std::vector<std::complex<double>> hankel_apply_naive(
    const HankelTruncation& T, const std::vector<std::complex<double>>& a) {
    detail::check_apply_input(T, a);
    std::vector<std::complex<double>> b(static_cast<std::size_t>(T.N), 0.0);
    for (int n = 0; n < T.N; ++n) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) acc += T.moments[n + k] * a[k];
        b[n] = acc;
    }
    return b;
}

// circulant-embedded application, O(N log N)
inline std::vector<std::complex<double>> hankel_apply_fast(
    const HankelTruncation& T, const std::vector<std::complex<double>>& a) {
    detail::check_apply_input(T, a);
    std::vector<std::complex<double>> x(T.fft_len, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) x[T.N - 1 - k] = a[k];  // reversed input
    detail::fft_inplace(x, -1);
    for (std::size_t i = 0; i < T.fft_len; ++i) x[i] *= T.c_hat[i];
    detail::fft_inplace(x, +1);
    std::vector<std::complex<double>> b(static_cast<std::size_t>(T.N));
    const double inv = 1.0 / static_cast<double>(T.fft_len);
    for (int n = 0; n < T.N; ++n) b[n] = x[n] * inv;
    return b;
}

// integral of f(t) / (1 - t z) d mu(t) for |z| < 1
inline std::complex<double> integral_apply(const Measure& mu, const Polynomial& f,
                                           std::complex<double> z,
                                           const QuadratureSpec& spec = {}) {
    const double az = std::abs(z);
    if (!(az < 1.0)) throw std::invalid_argument("integral_apply: need |z| < 1");
    auto integrand = [&](double t) { return f(t) / (1.0 - t * z); };
    const double peak = (az > 0.0) ? -std::log1p(-az) : 0.0;
    return integrate_against(mu, integrand, 0.0, peak, spec).value;
}

inline std::vector<std::complex<double>> default_agreement_grid() {
    std::vector<std::complex<double>> zs;
    for (double r : {0.5, 0.9})
        for (int k = 0; k < 8; ++k) zs.push_back(std::polar(r, 2.0 * M_PI * k / 8.0));
    return zs;
}

struct AgreementReport {
    double max_error = 0.0;  // max over z of |series - integral| / (1 + |integral|)
    std::vector<std::complex<double>> series;
    std::vector<std::complex<double>> integral;
};

// compares the coefficient route (N-term truncation) against the
// integral route on a grid inside the disc
inline AgreementReport agreement_check(const HankelTruncation& T, const Measure& mu,
                                       const Polynomial& f,
                                       const std::vector<std::complex<double>>& z_grid,
                                       const QuadratureSpec& spec = {}) {
    if (f.degree() >= T.N)
        throw std::invalid_argument("agreement_check: polynomial degree must stay below N");
    const auto b = hankel_apply_fast(T, f.coeffs);
    AgreementReport rep;
    for (const auto& z : z_grid) {
        std::complex<double> series = 0.0;
        for (std::size_t n = b.size(); n-- > 0;) series = series * z + b[n];
        const auto exact = integral_apply(mu, f, z, spec);
        rep.series.push_back(series);
        rep.integral.push_back(exact);
        rep.max_error = std::max(rep.max_error,
                                 std::abs(series - exact) / (1.0 + std::abs(exact)));
    }
    return rep;
}

inline AgreementReport agreement_check(const Measure& mu, const Polynomial& f,
                                       const std::vector<std::complex<double>>& z_grid,
                                       int N = 4096, const QuadratureSpec& spec = {}) {
    return agreement_check(HankelTruncation(mu, N, spec), mu, f, z_grid, spec);
}

struct OperatorNormEstimate {
    double value = 0.0;
    int iterations = 0;
};

// Largest eigenvalue of the (positive semidefinite) truncation by power
// iteration with Rayleigh-quotient stopping.  Two fixed start vectors
// (all ones, alternating signs) guard against an unlucky seed; the
// larger limit wins.
inline OperatorNormEstimate operator_norm_estimate(const HankelTruncation& T,
                                                   int max_iters = 20000,
                                                   double tol = 1e-10) {
    OperatorNormEstimate out;
    for (int seed = 0; seed < 2; ++seed) {
        std::vector<std::complex<double>> v(static_cast<std::size_t>(T.N));
        for (int i = 0; i < T.N; ++i)
            v[i] = (seed == 0 || i % 2 == 0) ? 1.0 : -1.0;
        double norm_v = std::sqrt(static_cast<double>(T.N));
        for (auto& x : v) x /= norm_v;

        double lambda = 0.0;
        bool converged = false;
        int it = 0;
        for (; it < max_iters; ++it) {
            auto w = hankel_apply_fast(T, v);
            double rayleigh = 0.0, norm_w = 0.0;
            for (int i = 0; i < T.N; ++i) {
                rayleigh += (v[i] * w[i]).real();  // v real-valued in spirit
                norm_w += std::norm(w[i]);
            }
            norm_w = std::sqrt(norm_w);
            if (norm_w < 1e-300) {  // landed in the kernel: contributes nothing
                lambda = 0.0;
                converged = true;
                break;
            }
            if (it > 0 && std::abs(rayleigh - lambda) <= tol * std::max(std::abs(rayleigh), 1e-300)) {
                lambda = rayleigh;
                converged = true;
                break;
            }
            lambda = rayleigh;
            for (int i = 0; i < T.N; ++i) v[i] = w[i] / norm_w;
        }
        if (!converged)
            throw ConvergenceError("operator norm: power iteration did not settle", lambda);
        out.value = std::max(out.value, lambda);
        out.iterations += it + 1;
    }
    return out;
}

// H^q norm of the N-term truncation of the operator image
inline double image_hq_norm(const Measure& mu, const Polynomial& f, double q, int N = 4096,
                            const QuadratureSpec& spec = {}) {
    if (f.degree() >= N)
        throw std::invalid_argument("image_hq_norm: polynomial degree must stay below N");
    const HankelTruncation T(mu, N, spec);
    return hp_norm(Polynomial(hankel_apply_fast(T, f.coeffs)), q);
}

}  // namespace hmu
