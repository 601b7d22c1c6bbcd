#pragma once

// Carleson-type functionals over boundary-approach grids.
//
// All evaluators share one report shape: functional values along the
// dyadic grid a_j = 1 - 2^-j, the sup and its argmax, and a trend
// classification obtained by fitting log(value) against the level index
// over the last half of the grid.  Geometric growth shows up as a
// straight line there, so a slope threshold separates
//   finite     sup stays bounded (decaying or flat values)
//   divergent  values grow geometrically
//   boundary   slope inside the flat band but values wander by more
//              than a factor 2, so no call is made
// The vanishing flag is a trend estimate (decaying slope plus an 8x
// drop first-to-last, or an exactly-zero tail), never a certificate.
//
// balayage_lp_norm integrates the sweep function
//   Phi(s) = integral over t <= 1-s of d mu(t) / (1 - t)
// in L^e over a geometric s-grid; predict() turns closed-form family
// profiles into boundedness/compactness verdicts for the operator
// acting between Hardy spaces.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbertmu/measure.hpp"
#include "hilbertmu/quadrature.hpp"

namespace hmu {

inline constexpr double kTolSlopePerLevel = 0.05 * 0.6931471805599453;  // 0.05 log 2
inline constexpr double kTolSlopePerLogN = 0.05;
inline constexpr double kFlatBandRatio = 2.0;
inline constexpr double kVanishingDrop = 8.0;
inline constexpr int kBalayageLevels = 40;

struct GridSpec {
    int levels = 14;  // a_j = 1 - 2^-j for j = 0..levels
};

inline std::vector<double> make_grid(const GridSpec& g) {
    if (g.levels < 4) throw std::invalid_argument("grid: need at least 4 levels");
    std::vector<double> a(static_cast<std::size_t>(g.levels) + 1);
    for (int j = 0; j <= g.levels; ++j) a[j] = 1.0 - std::ldexp(1.0, -j);
    return a;
}

struct CarlesonReport {
    double s = 1.0;
    double alpha = 0.0;
    std::vector<double> grid;    // a_j, or the moment indices for the moment-side view
    std::vector<double> values;  // functional per grid point
    double sup = 0.0;
    int argmax = 0;  // grid index for a-grids, coefficient index for the moment view
    double slope = 0.0;
    std::string verdict;  // finite | boundary | divergent
    bool vanishing = false;
};

namespace detail {

struct TrendFit {
    double slope = 0.0;
    bool enough = false;
};

inline TrendFit fit_log_slope(const std::vector<double>& x, const std::vector<double>& v,
                              std::size_t from) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = from; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) continue;
        const double y = std::log(v[i]);
        sx += x[i];
        sy += y;
        sxx += x[i] * x[i];
        sxy += x[i] * y;
        ++n;
    }
    TrendFit f;
    const double d = n * sxx - sx * sx;
    if (n >= 2 && d > 0.0) {
        f.slope = (n * sxy - sx * sy) / d;
        f.enough = true;
    }
    return f;
}

// fills sup/argmax/slope/verdict/vanishing from the value sequence
inline void classify_trend(CarlesonReport& r, const std::vector<double>& x, double tol) {
    r.sup = 0.0;
    r.argmax = 0;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (r.values[i] > r.sup) {
            r.sup = r.values[i];
            r.argmax = static_cast<int>(i);
        }
    }
    const std::size_t from = r.values.size() / 2;
    const TrendFit fit = fit_log_slope(x, r.values, from);
    r.slope = fit.enough ? fit.slope : 0.0;

    double wmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = from; i < r.values.size(); ++i) {
        if (!(r.values[i] > 0.0)) continue;
        wmax = std::max(wmax, r.values[i]);
        wmin = std::min(wmin, r.values[i]);
    }

    if (!fit.enough)
        r.verdict = "finite";  // tail values vanished outright, nothing can grow
    else if (r.slope > tol)
        r.verdict = "divergent";
    else if (r.slope < -tol)
        r.verdict = "finite";
    else
        r.verdict = (wmax <= kFlatBandRatio * wmin) ? "finite" : "boundary";

    const bool trailing_zero = !r.values.empty() && !(r.values.back() > 0.0) && r.sup > 0.0;
    r.vanishing = trailing_zero ||
                  (fit.enough && r.slope <= -tol &&
                   r.values.back() < r.values.front() / kVanishingDrop);
}

inline std::vector<double> level_axis(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<double>(j);
    return x;
}

inline std::string fmt_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace detail

// sup of tail mass / (1-a)^s over the dyadic grid
inline CarlesonReport carleson_sup(const Measure& mu, double s, const GridSpec& g = {},
                                   const QuadratureSpec& spec = {}) {
    if (!(s > 0.0)) throw std::invalid_argument("carleson_sup: s must be positive");
    validate(mu);
    CarlesonReport r;
    r.s = s;
    r.grid = make_grid(g);
    for (double a : r.grid) r.values.push_back(tail_mass(mu, a, spec) / std::pow(1.0 - a, s));
    detail::classify_trend(r, detail::level_axis(r.values.size()), kTolSlopePerLevel);
    return r;
}

// same with a logarithmic weight: tail * (log(2/(1-a^2)))^alpha / (1-a^2)^s
inline CarlesonReport log_carleson_sup(const Measure& mu, double alpha, double s,
                                       const GridSpec& g = {},
                                       const QuadratureSpec& spec = {}) {
    if (!(s > 0.0)) throw std::invalid_argument("log_carleson_sup: s must be positive");
    if (!(alpha >= 0.0)) throw std::invalid_argument("log_carleson_sup: alpha must be >= 0");
    validate(mu);
    CarlesonReport r;
    r.s = s;
    r.alpha = alpha;
    r.grid = make_grid(g);
    for (double a : r.grid) {
        const double one_minus_a2 = (1.0 - a) * (1.0 + a);
        r.values.push_back(tail_mass(mu, a, spec) *
                           std::pow(std::log(2.0 / one_minus_a2), alpha) /
                           std::pow(one_minus_a2, s));
    }
    detail::classify_trend(r, detail::level_axis(r.values.size()), kTolSlopePerLevel);
    return r;
}

// window-kernel functional:
//   (log(2/(1-a^2)))^alpha * integral ((1-a^2)/(1-a t)^2)^s d mu(t)
// finite exactly when the plain (log-)Carleson sup is, but sees the
// whole measure through a smooth kernel instead of a sharp tail cut
inline CarlesonReport zhao_K(const Measure& mu, double alpha, double s, const GridSpec& g = {},
                             const QuadratureSpec& spec = {}) {
    if (!(s > 0.0)) throw std::invalid_argument("zhao_K: s must be positive");
    if (!(alpha >= 0.0)) throw std::invalid_argument("zhao_K: alpha must be >= 0");
    validate(mu);
    CarlesonReport r;
    r.s = s;
    r.alpha = alpha;
    r.grid = make_grid(g);
    for (double a : r.grid) {
        const double one_minus_a2 = (1.0 - a) * (1.0 + a);
        auto kernel = [&](double t) {
            const double w = one_minus_a2 / ((1.0 - a * t) * (1.0 - a * t));
            return std::pow(w, s);
        };
        const double peak = (a > 0.0) ? -std::log1p(-a) : 0.0;
        const double integral = integrate_against(mu, kernel, 0.0, peak, spec).value;
        r.values.push_back(std::pow(std::log(2.0 / one_minus_a2), alpha) * integral);
    }
    detail::classify_trend(r, detail::level_axis(r.values.size()), kTolSlopePerLevel);
    return r;
}

// moment-side view: sup over n of (1+n)^s mu_n, with the growth trend
// fitted on the dyadic subsequence n = 2^k against log(1+n)
inline CarlesonReport moment_carleson_sup(const MomentSequence& ms, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("moment_carleson_sup: s must be positive");
    if (ms.values.size() < 64)
        throw std::invalid_argument("moment_carleson_sup: need at least 64 moments");
    CarlesonReport r;
    r.s = s;
    r.sup = 0.0;
    for (std::size_t n = 0; n < ms.values.size(); ++n) {
        const double w = std::pow(1.0 + n, s) * ms.values[n];
        if (w > r.sup) {
            r.sup = w;
            r.argmax = static_cast<int>(n);
        }
    }
    std::vector<double> x;
    for (std::size_t n = 1; n < ms.values.size(); n *= 2) {
        r.grid.push_back(static_cast<double>(n));
        r.values.push_back(std::pow(1.0 + n, s) * ms.values[n]);
        x.push_back(std::log(1.0 + static_cast<double>(n)));
    }
    const int argmax_keep = r.argmax;
    const double sup_keep = r.sup;
    detail::classify_trend(r, x, kTolSlopePerLogN);
    r.argmax = argmax_keep;  // sup/argmax range over every moment, not just the ladder
    r.sup = sup_keep;
    return r;
}

namespace detail {

// Phi(s) = integral over t <= 1-s of W(t) dmu(t)/(1-t),
// W = log(1/(1-t)) when log_weight is set, else 1
inline double balayage_at(const Measure& mu, double s, bool log_weight,
                          const QuadratureSpec& spec) {
    const double cut = 1.0 - s;  // include t <= cut
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a->points.size(); ++i) {
            const double t = a->points[i];
            if (t > cut) continue;
            const double x = 1.0 - t;
            acc += a->weights[i] * (log_weight ? std::log(1.0 / x) : 1.0) / x;
        }
        return acc;
    }
    const double U = (s < 1.0) ? std::log(1.0 / s) : 0.0;
    if (U <= 0.0) return 0.0;
    if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        const double g = p->gamma;
        if (!log_weight) {
            if (g == 0.0) return p->scale * U;
            return p->scale * (1.0 - std::pow(s, g)) / g;
        }
        if (g == 0.0) return p->scale * U * U / 2.0;
        return p->scale * (1.0 - (1.0 + g * U) * std::exp(-g * U)) / (g * g);
    }
    if (const auto* lp = std::get_if<LogPowerWeight>(&mu)) {
        auto integrand = [&](double u) {
            const double w = log_weight ? u : 1.0;
            return lp->scale * w * std::exp(-(lp->s - 1.0) * u) * std::pow(1.0 + u, -lp->alpha);
        };
        return integrate_panels(integrand, 0.0, U, spec).value;
    }
    const auto* tab = std::get_if<TabulatedDensity>(&mu);
    // piecewise-linear density: per-cell closed forms in x = 1-t
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < tab->grid.size(); ++i) {
        const double t0 = tab->grid[i];
        double t1 = tab->grid[i + 1];
        if (t0 > cut) break;
        const double m = (tab->density[i + 1] - tab->density[i]) / (t1 - t0);
        const double A = tab->density[i] + m * (1.0 - t0);  // density = A - m x
        t1 = std::min(t1, cut);
        const double xl = 1.0 - t1, xh = 1.0 - t0;  // xl <= xh
        if (!log_weight) {
            acc += A * std::log(xh / xl) - m * (xh - xl);
        } else {
            const double ll = std::log(1.0 / xl), lh = std::log(1.0 / xh);
            acc += A * (ll * ll - lh * lh) / 2.0 -
                   m * ((xh - xh * std::log(xh)) - (xl - xl * std::log(xl)));
        }
    }
    return acc;
}

struct BalayageLevels {
    std::vector<double> level_integrals;  // of Phi^e over s in [2^-k-1, 2^-k]
    double total = 0.0;
};

// exact step-function integration for purely atomic measures
inline BalayageLevels balayage_levels_atomic(const AtomicMeasure& a, double e, bool log_weight) {
    // jump locations in s, swept from s = 1 downward
    std::vector<std::pair<double, double>> jumps;  // (s_i = 1 - t_i, increment)
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const double x = 1.0 - a.points[i];
        jumps.emplace_back(x, a.weights[i] * (log_weight ? std::log(1.0 / x) : 1.0) / x);
    }
    std::sort(jumps.begin(), jumps.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });

    BalayageLevels out;
    out.level_integrals.assign(kBalayageLevels, 0.0);
    double phi = 0.0;
    std::size_t next = 0;
    // walk level boundaries and jump points together
    double hi = 1.0;
    for (int k = 0; k < kBalayageLevels; ++k) {
        const double lo = std::ldexp(1.0, -(k + 1));
        double upper = hi;
        while (true) {
            // phi is constant on (max(lo, next jump), upper]
            const double next_jump = (next < jumps.size()) ? jumps[next].first : 0.0;
            if (next_jump > lo) {
                out.level_integrals[k] += std::pow(phi, e) * (upper - next_jump);
                phi += jumps[next].second;
                upper = next_jump;
                ++next;
            } else {
                out.level_integrals[k] += std::pow(phi, e) * (upper - lo);
                break;
            }
        }
        out.total += out.level_integrals[k];
        hi = lo;
    }
    // everything below the last level boundary sees the full sweep value
    while (next < jumps.size()) phi += jumps[next++].second;
    out.total += std::pow(phi, e) * std::ldexp(1.0, -kBalayageLevels);
    return out;
}

}  // namespace detail

struct BalayageReport {
    double exponent = 1.0;       // the L^e exponent
    double value = 0.0;          // (integral of Phi^e)^{1/e}, truncated at s = 2^-40
    std::vector<double> level_integrals;
    double slope = 0.0;          // trend of log(level integral) per level
    bool divergent = false;
};

namespace detail {

inline BalayageReport balayage_norm_impl(const Measure& mu, double e, bool log_weight,
                                         const QuadratureSpec& spec) {
    if (!(e >= 1.0)) throw std::invalid_argument("balayage norm: exponent must be >= 1");
    validate(mu);
    BalayageReport rep;
    rep.exponent = e;
    double total = 0.0;
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        auto lv = balayage_levels_atomic(*a, e, log_weight);
        rep.level_integrals = std::move(lv.level_integrals);
        total = lv.total;
    } else {
        for (int k = 0; k < kBalayageLevels; ++k) {
            const double lo = std::ldexp(1.0, -(k + 1));
            const double hi = std::ldexp(1.0, -k);
            auto phi_pow = [&](double s) {
                return std::pow(balayage_at(mu, s, log_weight, spec), e);
            };
            rep.level_integrals.push_back(integrate_panels(phi_pow, lo, hi, spec).value);
            total += rep.level_integrals.back();
        }
    }
    rep.value = std::pow(total, 1.0 / e);
    const auto x = level_axis(rep.level_integrals.size());
    const TrendFit fit =
        fit_log_slope(x, rep.level_integrals, rep.level_integrals.size() / 2);
    rep.slope = fit.enough ? fit.slope : 0.0;
    // summable level integrals must decay geometrically
    rep.divergent = fit.enough && fit.slope >= -kTolSlopePerLevel;
    return rep;
}

}  // namespace detail

inline BalayageReport balayage_lp_norm(const Measure& mu, double e,
                                       const QuadratureSpec& spec = {}) {
    return detail::balayage_norm_impl(mu, e, false, spec);
}

inline BalayageReport log_balayage_lp_norm(const Measure& mu, double e,
                                           const QuadratureSpec& spec = {}) {
    return detail::balayage_norm_impl(mu, e, true, spec);
}

// ---------------------------------------------------------------------------
// closed-form family profiles and the boundedness decision table
// ---------------------------------------------------------------------------

namespace detail {

struct ProfileAnswer {
    bool holds = false;
    bool vanishing = false;
};

// is the tail mass O((1-a)^s), and does the quotient vanish?
inline ProfileAnswer profile_carleson(const Measure& mu, double s) {
    if (std::holds_alternative<AtomicMeasure>(mu)) return {true, true};
    if (const auto* p = std::get_if<PowerWeight>(&mu))
        return {p->gamma + 1.0 >= s, p->gamma + 1.0 > s};
    const auto* lp = std::get_if<LogPowerWeight>(&mu);
    if (!lp) return {false, false};
    if (lp->s > s) return {true, true};
    if (lp->s == s) return {true, lp->alpha > 0.0};
    return {false, false};
}

// same with one extra log factor on the quotient
inline ProfileAnswer profile_log_carleson(const Measure& mu, double s) {
    if (std::holds_alternative<AtomicMeasure>(mu)) return {true, true};
    if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        const bool strict = p->gamma + 1.0 > s;
        return {strict, strict};
    }
    const auto* lp = std::get_if<LogPowerWeight>(&mu);
    if (!lp) return {false, false};
    if (lp->s > s) return {true, true};
    if (lp->s == s) return {lp->alpha >= 1.0, lp->alpha > 1.0};
    return {false, false};
}

// is the sweep function Phi in L^e(0,1)?
inline bool profile_phi_in_le(const Measure& mu, double e) {
    if (std::holds_alternative<AtomicMeasure>(mu)) return true;
    if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        if (p->gamma >= 0.0) return true;  // Phi bounded or log growth
        return -p->gamma * e < 1.0;        // Phi ~ s^gamma near 0
    }
    const auto* lp = std::get_if<LogPowerWeight>(&mu);
    if (!lp) return false;
    if (lp->s >= 1.0) return true;  // at worst polylog growth
    const double rate = (1.0 - lp->s) * e;
    return rate < 1.0 || (rate == 1.0 && lp->alpha * e > 1.0);
}

// is the log-weighted sweep function in L^e(0,1)?
inline bool profile_logphi_in_le(const Measure& mu, double e) {
    if (std::holds_alternative<AtomicMeasure>(mu)) return true;
    if (const auto* p = std::get_if<PowerWeight>(&mu)) {
        if (p->gamma >= 0.0) return true;
        return -p->gamma * e < 1.0;  // the log factor never decides here
    }
    const auto* lp = std::get_if<LogPowerWeight>(&mu);
    if (!lp) return false;
    if (lp->s >= 1.0) return true;
    const double rate = (1.0 - lp->s) * e;
    return rate < 1.0 || (rate == 1.0 && (lp->alpha - 1.0) * e > 1.0);
}

}  // namespace detail

struct Prediction {
    double p = 0.0;
    double q = 0.0;
    std::string verdict;         // bounded | compact | unbounded | boundary | undecided
    std::string hypothesis;      // standing integrability assumption on the measure
    bool hypothesis_holds = false;
    std::string criterion;       // the decisive measure condition
    bool criterion_holds = false;
    double s_required = 0.0;     // Carleson exponent when the criterion is of that type
    std::vector<std::string> notes;
};

// Decision table for the operator from H^p into H^q, for families with
// closed-form tail behaviour.  Tabulated densities and targets below
// H^1 come back undecided; everything else is decided analytically.
inline Prediction predict(double p, double q, const Measure& mu) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("predict: exponents must be positive");
    validate(mu);
    Prediction out;
    out.p = p;
    out.q = q;

    if (std::holds_alternative<TabulatedDensity>(mu)) {
        out.verdict = "undecided";
        out.notes.push_back("tabulated densities have no closed-form profile; "
                            "use the numeric functionals");
        return out;
    }
    if (q < 1.0) {
        out.verdict = "undecided";
        out.notes.push_back("no classification for targets below H^1");
        return out;
    }

    const double s_req = 1.0 / p + 1.0 - 1.0 / q;

    if (p <= 1.0) {
        const double s_hyp = 1.0 / p;
        out.hypothesis = "s-Carleson with s = " + detail::fmt_g(s_hyp);
        out.hypothesis_holds = detail::profile_carleson(mu, s_hyp).holds;
        if (!out.hypothesis_holds) {
            out.verdict = "unbounded";
            out.notes.push_back("the operator is not even well defined on all of H^p "
                                "without the Carleson hypothesis");
            return out;
        }
        if (q == 1.0) {
            const auto c = detail::profile_log_carleson(mu, s_hyp);
            out.criterion = "1-logarithmic s-Carleson with s = " + detail::fmt_g(s_hyp);
            out.criterion_holds = c.holds;
            out.s_required = s_hyp;
            if (!c.holds) {
                out.verdict = "unbounded";
            } else {
                out.verdict = c.vanishing ? "compact" : "bounded";
                if (c.vanishing)
                    out.notes.push_back("the vanishing variant holds, upgrading bounded "
                                        "to compact");
            }
            return out;
        }
        const auto c = detail::profile_carleson(mu, s_req);
        out.criterion = "s-Carleson with s = " + detail::fmt_g(s_req);
        out.criterion_holds = c.holds;
        out.s_required = s_req;
        if (!c.holds) {
            out.verdict = "unbounded";
        } else {
            out.verdict = c.vanishing ? "compact" : "bounded";
            if (c.vanishing)
                out.notes.push_back("the vanishing variant holds, upgrading bounded to compact");
        }
        return out;
    }

    // p > 1
    const double pprime = conj_exponent(p);
    out.hypothesis = "sweep function in L^" + detail::fmt_g(pprime);
    out.hypothesis_holds = detail::profile_phi_in_le(mu, pprime);
    if (!out.hypothesis_holds) {
        out.verdict = "unbounded";
        out.notes.push_back("the integral pairing against H^p already fails");
        return out;
    }

    if (q >= p) {
        const auto c = detail::profile_carleson(mu, s_req);
        out.criterion = "s-Carleson with s = " + detail::fmt_g(s_req);
        out.criterion_holds = c.holds;
        out.s_required = s_req;
        if (!c.holds) {
            out.verdict = "unbounded";
        } else if (q > p) {
            out.verdict = c.vanishing ? "compact" : "bounded";
            if (c.vanishing)
                out.notes.push_back("the vanishing variant holds, upgrading bounded to compact");
        } else if (c.vanishing) {
            if (std::holds_alternative<AtomicMeasure>(mu)) {
                out.verdict = "compact";
                out.notes.push_back("finitely many atoms give a finite-rank operator");
            } else {
                out.verdict = "boundary";
                out.notes.push_back("bounded for sure; compactness at p = q is not settled "
                                    "by the vanishing condition alone");
            }
        } else {
            out.verdict = "bounded";
        }
        return out;
    }

    if (q == 1.0) {
        out.criterion = "log-weighted sweep function in L^" + detail::fmt_g(pprime);
        out.criterion_holds = detail::profile_logphi_in_le(mu, pprime);
        out.verdict = out.criterion_holds ? "compact" : "unbounded";
        if (out.criterion_holds)
            out.notes.push_back("below the source exponent, bounded already forces compact");
        return out;
    }

    // 1 < q < p
    const double lambda = 1.0 / (1.0 / q - 1.0 / p);
    out.criterion = "sweep function in L^" + detail::fmt_g(lambda);
    out.criterion_holds = detail::profile_phi_in_le(mu, lambda);
    out.verdict = out.criterion_holds ? "compact" : "unbounded";
    if (out.criterion_holds)
        out.notes.push_back("below the source exponent, bounded already forces compact");
    return out;
}

}  // namespace hmu
