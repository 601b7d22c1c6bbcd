#pragma once

// Panel-based Gauss-Legendre integration with interval doubling.
//
// All measure-related integrals in this library are pushed through the
// substitution t = 1 - exp(-u), which turns densities with endpoint
// behaviour at t -> 1 into smooth, exponentially decaying integrands on
// [0, inf).  The engine below integrates over a finite window [a, b]
// (the caller picks b so the dropped tail is below tolerance) by
// doubling the number of equal panels until two successive estimates
// agree to the requested relative tolerance or the node budget runs out.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmu {

struct QuadratureSpec {
    int node_budget = 4096;      // max integrand evaluations per integral
    double rel_tol = 1e-10;      // target relative tolerance
    bool endpoint_substitution = true;  // use t = 1 - exp(-u) for [0,1) integrals
};

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;  // |last - previous| between doublings
    int nodes_used = 0;
    bool converged = false;
};

// Thrown when the node budget is exhausted before two successive
// refinements agree; carries the best estimate seen so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double residual)
        : std::runtime_error(what), last_estimate(estimate), last_residual(residual) {}
    double last_estimate;
    double last_residual;
};

namespace detail {

inline constexpr int kGaussOrder = 16;

struct GaussRule {
    double node[kGaussOrder];    // on (-1, 1)
    double weight[kGaussOrder];
};

// Nodes/weights of the 16-point rule, found by Newton iteration on the
// Legendre recurrence.  Computed once per process.
inline const GaussRule& gauss16() {
    static const GaussRule rule = [] {
        GaussRule r;
        const int n = kGaussOrder;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                // evaluate P_n(x) and P_n'(x) via the three-term recurrence
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            r.node[i] = x;
            r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& x) { return std::abs(x); }

}  // namespace detail

// Integrate f over [a, b] with doubling panels of 16-point Gauss-Legendre.
// F maps double -> double or double -> complex<double>.
template <class F>
auto integrate_panels(F&& f, double a, double b, const QuadratureSpec& spec)
    -> QuadratureResult<decltype(f(a))> {
    using T = decltype(f(a));
    QuadratureResult<T> res;
    if (!(b > a)) {  // empty or inverted interval integrates to zero
        res.converged = true;
        return res;
    }
    const auto& rule = detail::gauss16();
    T prev{};
    bool have_prev = false;
    for (int panels = 1;; panels *= 2) {
        if (res.nodes_used + panels * detail::kGaussOrder > spec.node_budget) {
            if (have_prev) {
                throw QuadratureError("quadrature: node budget exhausted before convergence",
                                      detail::abs_of(prev), res.error_estimate);
            }
            throw QuadratureError("quadrature: node budget too small for a single pass", 0.0, 0.0);
        }
        T sum{};
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            T acc{};
            for (int i = 0; i < detail::kGaussOrder; ++i)
                acc += rule.weight[i] * f(mid + 0.5 * h * rule.node[i]);
            sum += acc * (0.5 * h);
        }
        res.nodes_used += panels * detail::kGaussOrder;
        if (have_prev) {
            const double diff = detail::abs_of(sum - prev);
            const double scale = std::max(detail::abs_of(sum), 1e-300);
            res.error_estimate = diff;
            if (diff <= spec.rel_tol * scale) {
                res.value = sum;
                res.converged = true;
                return res;
            }
        }
        prev = sum;
        have_prev = true;
    }
}

}  // namespace hmu
