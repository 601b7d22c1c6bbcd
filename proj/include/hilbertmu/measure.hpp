#pragma once

// Positive Borel measures on [0,1) and their moment sequences.
//
// Four concrete families are supported:
//   Atomic            finitely many point masses t_i with weights w_i > 0
//   PowerWeight       d mu = scale * (1-t)^gamma dt,          gamma > -1
//   LogPowerWeight    d mu = scale * (1-t)^(s-1) * log(e/(1-t))^(-alpha) dt
//   Tabulated         piecewise-linear density on a grid, zero beyond it
//
// PowerWeight with gamma = 0, scale = 1 is Lebesgue measure on [0,1); its
// moment sequence 1/(n+1) generates the classical Hilbert matrix.
//
// Moments mu_n = integral of t^n d mu use closed forms where available
// (Atomic, PowerWeight via the Beta function, Tabulated by exact
// integration of the piecewise-linear interpolant) and otherwise the
// substitution u = -log(1-t), under which every density here becomes a
// smooth exponentially decaying integrand:
//   PowerWeight     -> scale * exp(-(gamma+1) u)
//   LogPowerWeight  -> scale * exp(-s u) * (1+u)^(-alpha)

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hilbertmu/quadrature.hpp"

namespace hmu {

struct AtomicMeasure {
    std::vector<double> points;   // in [0, 1)
    std::vector<double> weights;  // strictly positive
};

struct PowerWeight {
    double gamma = 0.0;  // > -1
    double scale = 1.0;  // > 0
};

struct LogPowerWeight {
    double s = 1.0;      // > 0
    double alpha = 0.0;  // >= 0
    double scale = 1.0;  // > 0
};

struct TabulatedDensity {
    std::vector<double> grid;     // strictly increasing, inside [0, 1)
    std::vector<double> density;  // >= 0, same length as grid
};

using Measure = std::variant<AtomicMeasure, PowerWeight, LogPowerWeight, TabulatedDensity>;

inline PowerWeight lebesgue() { return PowerWeight{0.0, 1.0}; }

inline void validate(const Measure& mu) {
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        if (a->points.empty() || a->points.size() != a->weights.size())
            throw std::invalid_argument("atomic measure: points/weights must be non-empty and equal length");
        for (double t : a->points)
            if (!(t >= 0.0 && t < 1.0))
                throw std::invalid_argument("atomic measure: points must lie in [0, 1)");
        for (double w : a->weights)
            if (!(w > 0.0))
                throw std::invalid_argument("atomic measure: weights must be positive");
    } else if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        if (!(p->gamma > -1.0))
            throw std::invalid_argument("power weight: gamma must exceed -1");
        if (!(p->scale > 0.0))
            throw std::invalid_argument("power weight: scale must be positive");
    } else if (const auto* l = std::get_if<LogPowerWeight>(&mu)) {
        if (!(l->s > 0.0))
            throw std::invalid_argument("log power weight: s must be positive");
        if (!(l->alpha >= 0.0))
            throw std::invalid_argument("log power weight: alpha must be nonnegative");
        if (!(l->scale > 0.0))
            throw std::invalid_argument("log power weight: scale must be positive");
    } else if (const auto* tb = std::get_if<TabulatedDensity>(&mu)) {
        if (tb->grid.size() < 2 || tb->grid.size() != tb->density.size())
            throw std::invalid_argument("tabulated density: need >= 2 grid points and matching density length");
        for (std::size_t i = 0; i < tb->grid.size(); ++i) {
            if (!(tb->grid[i] >= 0.0 && tb->grid[i] < 1.0))
                throw std::invalid_argument("tabulated density: grid must lie in [0, 1)");
            if (i > 0 && !(tb->grid[i] > tb->grid[i - 1]))
                throw std::invalid_argument("tabulated density: grid must be strictly increasing");
            if (!(tb->density[i] >= 0.0))
                throw std::invalid_argument("tabulated density: density must be nonnegative");
        }
        double mass = 0.0;
        for (std::size_t i = 0; i + 1 < tb->grid.size(); ++i)
            mass += 0.5 * (tb->density[i] + tb->density[i + 1]) * (tb->grid[i + 1] - tb->grid[i]);
        if (!(mass > 0.0))
            throw std::invalid_argument("tabulated density: total mass must be positive");
    }
}

inline std::string family_name(const Measure& mu) {
    switch (mu.index()) {
        case 0: return "atomic";
        case 1: return "power";
        case 2: return "logpower";
        default: return "tabulated";
    }
}

namespace detail {

// transformed density: d mu(t) restricted to t = 1 - exp(-u), as a function of u
inline double density_u(const Measure& mu, double u) {
    if (const auto* p = std::get_if<PowerWeight>(&mu))
        return p->scale * std::exp(-(p->gamma + 1.0) * u);
    if (const auto* l = std::get_if<LogPowerWeight>(&mu))
        return l->scale * std::exp(-l->s * u) * std::pow(1.0 + u, -l->alpha);
    throw std::invalid_argument("density_u: measure has no smooth radial density");
}

// exponential decay rate of density_u; controls the integration window
inline double density_decay_rate(const Measure& mu) {
    if (const auto* p = std::get_if<PowerWeight>(&mu)) return p->gamma + 1.0;
    if (const auto* l = std::get_if<LogPowerWeight>(&mu)) return l->s;
    throw std::invalid_argument("density_decay_rate: measure has no smooth radial density");
}

inline double tabulated_density_at(const TabulatedDensity& tb, double t) {
    if (t < tb.grid.front() || t > tb.grid.back()) return 0.0;
    auto it = std::upper_bound(tb.grid.begin(), tb.grid.end(), t);
    std::size_t i = (it == tb.grid.begin()) ? 0 : static_cast<std::size_t>(it - tb.grid.begin() - 1);
    if (i + 1 >= tb.grid.size()) i = tb.grid.size() - 2;
    const double w = (t - tb.grid[i]) / (tb.grid[i + 1] - tb.grid[i]);
    return tb.density[i] * (1.0 - w) + tb.density[i + 1] * w;
}

// exact integral of t^n * (linear density) over one cell [a, b]
inline double tabulated_cell_moment(double a, double b, double rho_a, double rho_b, int n) {
    const double d = (rho_b - rho_a) / (b - a);
    const double c = rho_a - d * a;
    const double i1 = (std::pow(b, n + 1) - std::pow(a, n + 1)) / (n + 1.0);
    const double i2 = (std::pow(b, n + 2) - std::pow(a, n + 2)) / (n + 2.0);
    return c * i1 + d * i2;
}

}  // namespace detail

// Integral of f(t) d mu(t) over [t_lo, 1).  `peak_u` hints where the
// integrand concentrates in u = -log(1-t) coordinates (pass log(n+2) when
// f behaves like t^n, -log(1-a) for kernels peaking at t = a); the
// integration window extends well past both the hint and the density's
// own decay length.  Atomic measures are summed exactly.
template <class F>
auto integrate_against(const Measure& mu, F&& f, double t_lo, double peak_u,
                       const QuadratureSpec& spec = {})
    -> QuadratureResult<decltype(f(0.5))> {
    using T = decltype(f(0.5));
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        QuadratureResult<T> res;
        for (std::size_t i = 0; i < a->points.size(); ++i)
            if (a->points[i] >= t_lo) res.value += a->weights[i] * f(a->points[i]);
        res.converged = true;
        return res;
    }
    if (const auto* tb = std::get_if<TabulatedDensity>(&mu)) {
        const double lo = std::max(t_lo, tb->grid.front());
        const double hi = tb->grid.back();
        auto integrand = [&](double t) { return f(t) * detail::tabulated_density_at(*tb, t); };
        return integrate_panels(integrand, lo, hi, spec);
    }
    const double rate = detail::density_decay_rate(mu);
    const double u_lo = (t_lo <= 0.0) ? 0.0 : -std::log1p(-t_lo);
    const double u_hi = std::max(u_lo, peak_u) + 45.0 / rate + 5.0;
    auto integrand = [&](double u) { return f(-std::expm1(-u)) * detail::density_u(mu, u); };
    return integrate_panels(integrand, u_lo, u_hi, spec);
}

// mu([a, 1)).  Exact for Atomic, PowerWeight and Tabulated; quadrature
// for LogPowerWeight.
inline double tail_mass(const Measure& mu, double a, const QuadratureSpec& spec = {}) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("tail_mass: a must lie in [0, 1)");
    if (const auto* at = std::get_if<AtomicMeasure>(&mu)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < at->points.size(); ++i)
            if (at->points[i] >= a) sum += at->weights[i];
        return sum;
    }
    if (const auto* p = std::get_if<PowerWeight>(&mu))
        return p->scale * std::pow(1.0 - a, p->gamma + 1.0) / (p->gamma + 1.0);
    if (const auto* tb = std::get_if<TabulatedDensity>(&mu)) {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < tb->grid.size(); ++i) {
            double lo = tb->grid[i], hi = tb->grid[i + 1];
            if (hi <= a) continue;
            double rho_lo = tb->density[i], rho_hi = tb->density[i + 1];
            if (lo < a) {
                rho_lo = detail::tabulated_density_at(*tb, a);
                lo = a;
            }
            sum += 0.5 * (rho_lo + rho_hi) * (hi - lo);
        }
        return sum;
    }
    return integrate_against(mu, [](double) { return 1.0; }, a, 0.0, spec).value;
}

inline double total_mass(const Measure& mu, const QuadratureSpec& spec = {}) {
    return tail_mass(mu, 0.0, spec);
}

inline double beta_function(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

// Force the generic quadrature path even when a closed form exists;
// used to cross-check the engine against the Beta function.
inline QuadratureResult<double> moment_by_quadrature(const Measure& mu, int n,
                                                     const QuadratureSpec& spec = {}) {
    if (n < 0) throw std::invalid_argument("moment: order must be nonnegative");
    if (std::holds_alternative<AtomicMeasure>(mu))
        throw std::invalid_argument("moment_by_quadrature: atomic measures have no density");
    auto f = [n](double t) { return std::pow(t, static_cast<double>(n)); };
    return integrate_against(mu, f, 0.0, std::log(n + 2.0), spec);
}

enum class MomentMethod : unsigned char { closed_form, quadrature };

struct MomentSequence {
    std::vector<double> values;         // mu_0 .. mu_M
    std::vector<MomentMethod> methods;  // per entry
    double error_bound = 0.0;           // max absolute per-entry bound
    Measure source;
};

namespace detail {
inline constexpr double kClosedFormRelError = 64.0 * 2.220446049250313e-16;
}

// n-th moment.  Closed forms: Atomic (exact power sum), PowerWeight
// (scale * Beta(n+1, gamma+1) via the ratio recurrence
// mu_n = mu_{n-1} * n / (n + gamma + 1), whose rounding drift is smooth
// in n and therefore survives repeated differencing; the Lebesgue case
// scale/(n+1) stays exact), Tabulated (cell-by-cell integration of the
// linear density).  LogPowerWeight falls back to quadrature.
inline double moment(const Measure& mu, int n, const QuadratureSpec& spec = {}) {
    if (n < 0) throw std::invalid_argument("moment: order must be nonnegative");
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a->points.size(); ++i)
            sum += a->weights[i] * std::pow(a->points[i], static_cast<double>(n));
        return sum;
    }
    if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        if (p->gamma == 0.0) return p->scale / (n + 1.0);
        double v = p->scale / (p->gamma + 1.0);
        for (int k = 1; k <= n; ++k) v *= k / (k + p->gamma + 1.0);
        return v;
    }
    if (const auto* tb = std::get_if<TabulatedDensity>(&mu)) {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < tb->grid.size(); ++i)
            sum += detail::tabulated_cell_moment(tb->grid[i], tb->grid[i + 1],
                                                 tb->density[i], tb->density[i + 1], n);
        return sum;
    }
    return moment_by_quadrature(mu, n, spec).value;
}

// Moments mu_0 .. mu_M with per-entry method tags and a shared absolute
// error bound (closed forms contribute a few ulps, quadrature entries
// their final refinement difference).
inline MomentSequence moments_up_to(const Measure& mu, int M, const QuadratureSpec& spec = {}) {
    if (M < 0) throw std::invalid_argument("moments_up_to: order must be nonnegative");
    validate(mu);
    MomentSequence seq;
    seq.source = mu;
    seq.values.reserve(M + 1);
    seq.methods.reserve(M + 1);
    if (const auto* p = std::get_if<PowerWeight>(&mu); p && p->gamma != 0.0) {
        double v = p->scale / (p->gamma + 1.0);
        for (int n = 0; n <= M; ++n) {
            seq.values.push_back(v);
            seq.methods.push_back(MomentMethod::closed_form);
            seq.error_bound = std::max(seq.error_bound, detail::kClosedFormRelError * v);
            v *= (n + 1.0) / (n + p->gamma + 2.0);
        }
        return seq;
    }
    const bool needs_quadrature = std::holds_alternative<LogPowerWeight>(mu);
    for (int n = 0; n <= M; ++n) {
        if (needs_quadrature) {
            auto res = moment_by_quadrature(mu, n, spec);
            seq.values.push_back(res.value);
            seq.methods.push_back(MomentMethod::quadrature);
            seq.error_bound = std::max(seq.error_bound, res.error_estimate);
        } else {
            const double v = moment(mu, n, spec);
            seq.values.push_back(v);
            seq.methods.push_back(MomentMethod::closed_form);
            seq.error_bound = std::max(seq.error_bound, detail::kClosedFormRelError * std::abs(v));
        }
    }
    return seq;
}

// Conjugate exponent a' = a / (a - 1) for a > 1.
inline double conj_exponent(double a) {
    if (!(a > 1.0)) throw std::invalid_argument("conj_exponent: exponent must exceed 1");
    return a / (a - 1.0);
}

}  // namespace hmu
