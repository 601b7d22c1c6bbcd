#pragma once

// Schatten-class diagnostics for moment Hankel truncations.
//
// Two independent tracks measure the same membership question:
//   spectral   partial sums of lambda^p over the dense spectrum of the
//              N x N truncation
//   criterion  partial sums of (n+1)^{p-1} mu_n^p over the moments
// Truncations of a fixed operator only ever grow these sums, so class
// membership shows up as both tracks flattening along a doubling ladder
// of N, and non-membership as both growing with a stable slope against
// log N.  membership_verdict fits both and reports in_Sp / not_in_Sp /
// boundary with the raw evidence attached.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbertmu/hankel.hpp"
#include "hilbertmu/measure.hpp"

namespace hmu {

inline constexpr int kDenseSpectrumCap = 2048;

struct SchattenReport {
    double p = 2.0;
    int N = 0;
    std::vector<double> singular_values;  // nonincreasing
    double schatten_partial = 0.0;        // sum of lambda^p
    double criterion_partial = 0.0;       // sum of (n+1)^{p-1} mu_n^p
};

// full spectrum of the symmetric truncation; singular values are the
// absolute eigenvalues, sorted downward
inline std::vector<double> singular_values(const HankelTruncation& T) {
    if (T.N > kDenseSpectrumCap)
        throw std::invalid_argument("singular_values: truncation above the dense cap");
    Eigen::MatrixXd M(T.N, T.N);
    for (int i = 0; i < T.N; ++i)
        for (int j = 0; j < T.N; ++j) M(i, j) = T.entry(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("singular_values: eigensolver did not converge");
    std::vector<double> lam(static_cast<std::size_t>(T.N));
    for (int i = 0; i < T.N; ++i) lam[i] = std::abs(es.eigenvalues()[i]);
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return lam;
}

inline double schatten_pnorm(const HankelTruncation& T, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten_pnorm: p must be positive");
    double acc = 0.0;
    for (double lam : singular_values(T)) acc += std::pow(lam, p);
    return std::pow(acc, 1.0 / p);
}

inline double criterion_sum(const MomentSequence& ms, double p, int N) {
    if (!(p > 1.0)) throw std::invalid_argument("criterion_sum: p must exceed 1");
    if (N < 1 || ms.values.size() < static_cast<std::size_t>(N))
        throw std::invalid_argument("criterion_sum: moment sequence shorter than N");
    double acc = 0.0;
    for (int n = 0; n < N; ++n)
        acc += std::pow(n + 1.0, p - 1.0) * std::pow(ms.values[n], p);
    return acc;
}

inline SchattenReport schatten_report(const Measure& mu, double p, int N,
                                      const QuadratureSpec& spec = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("schatten_report: p must exceed 1");
    const auto ms = moments_up_to(mu, N < 1 ? 0 : 2 * N - 2, spec);
    const HankelTruncation T(ms, N);
    SchattenReport rep;
    rep.p = p;
    rep.N = N;
    rep.singular_values = singular_values(T);
    for (double lam : rep.singular_values) rep.schatten_partial += std::pow(lam, p);
    rep.criterion_partial = criterion_sum(ms, p, N);
    return rep;
}

struct MembershipVerdict {
    std::string verdict;  // in_Sp | not_in_Sp | boundary
    double spectral_slope = 0.0;       // vs log N over the last three ladder points
    double criterion_slope = 0.0;
    double spectral_increment = 0.0;   // relative growth over the last doubling
    double criterion_increment = 0.0;
    bool spectral_flat = false;
    bool criterion_flat = false;
    std::vector<SchattenReport> evidence;
};

namespace detail {

inline double partial_sum_slope(const std::vector<double>& logN, const std::vector<double>& S) {
    // least-squares slope over the last three points
    const std::size_t from = S.size() - 3;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = from; i < S.size(); ++i) {
        sx += logN[i];
        sy += S[i];
        sxx += logN[i] * logN[i];
        sxy += logN[i] * S[i];
    }
    const double n = 3.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

inline MembershipVerdict membership_verdict(const Measure& mu, double p,
                                            const std::vector<int>& ladder = {128, 256, 512,
                                                                              1024},
                                            const QuadratureSpec& spec = {}) {
    if (!(p > 1.0)) throw std::invalid_argument("membership_verdict: p must exceed 1");
    if (ladder.size() < 3)
        throw std::invalid_argument("membership_verdict: ladder needs at least 3 sizes");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (ladder[i] < 1 || ladder[i] > kDenseSpectrumCap)
            throw std::invalid_argument("membership_verdict: ladder size out of range");
        if (i > 0 && ladder[i] != 2 * ladder[i - 1])
            throw std::invalid_argument("membership_verdict: ladder must double");
    }

    const int top = ladder.back();
    const auto ms = moments_up_to(mu, 2 * top - 2, spec);

    MembershipVerdict out;
    std::vector<double> logN, spectral, criterion;
    for (int N : ladder) {
        const HankelTruncation T(ms, N);
        SchattenReport rep;
        rep.p = p;
        rep.N = N;
        rep.singular_values = singular_values(T);
        for (double lam : rep.singular_values) rep.schatten_partial += std::pow(lam, p);
        rep.criterion_partial = criterion_sum(ms, p, N);
        logN.push_back(std::log(static_cast<double>(N)));
        spectral.push_back(rep.schatten_partial);
        criterion.push_back(rep.criterion_partial);
        out.evidence.push_back(std::move(rep));
    }

    out.spectral_slope = detail::partial_sum_slope(logN, spectral);
    out.criterion_slope = detail::partial_sum_slope(logN, criterion);
    auto last_increment = [](const std::vector<double>& S) {
        const double hi = S.back(), lo = S[S.size() - 2];
        return (hi > 0.0) ? (hi - lo) / hi : 0.0;
    };
    out.spectral_increment = last_increment(spectral);
    out.criterion_increment = last_increment(criterion);
    out.spectral_flat = out.spectral_increment < 0.01;
    out.criterion_flat = out.criterion_increment < 0.01;

    const bool spectral_growing = !out.spectral_flat && out.spectral_slope > 0.0;
    const bool criterion_growing = !out.criterion_flat && out.criterion_slope > 0.0;
    if (out.spectral_flat && out.criterion_flat)
        out.verdict = "in_Sp";
    else if (spectral_growing && criterion_growing)
        out.verdict = "not_in_Sp";
    else
        out.verdict = "boundary";
    return out;
}

}  // namespace hmu
