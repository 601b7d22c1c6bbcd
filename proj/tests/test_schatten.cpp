#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hilbertmu/measure.hpp"
#include "hilbertmu/hankel.hpp"
#include "hilbertmu/hardy.hpp"
#include "hilbertmu/schatten.hpp"

using namespace hmu;

namespace {

// roots of the cubic x^3 - c2 x^2 + c1 x - c0 by bisection, one root per
// bracket; deliberately independent of any eigensolver
double cubic_root(double c2, double c1, double c0, double lo, double hi) {
    auto f = [&](double x) { return ((x - c2) * x + c1) * x - c0; };
    double flo = f(lo);
    REQUIRE(flo * f(hi) < 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) * flo <= 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = f(lo);
        }
    }
    return 0.5 * (lo + hi);
}

HankelTruncation truncation_of(const Measure& mu, int n) {
    return HankelTruncation(moments_up_to(mu, 2 * n - 2), n);
}

}  // namespace

TEST_CASE("dense spectra of small truncations match hand values", "[schatten]") {
    SECTION("unit mass at the origin is rank one") {
        AtomicMeasure atom;
        atom.points = {0.0};
        atom.weights = {2.0};
        const auto lam = singular_values(truncation_of(atom, 8));
        REQUIRE(lam.size() == 8);
        REQUIRE(lam[0] == Catch::Approx(2.0).margin(1e-13));
        for (std::size_t i = 1; i < lam.size(); ++i) REQUIRE(lam[i] <= 1e-13);
        for (double p : {1.01, 2.0, 3.0})
            REQUIRE(schatten_pnorm(truncation_of(atom, 8), p) ==
                    Catch::Approx(2.0).margin(1e-12));
    }

    SECTION("one-by-one truncation is the zeroth moment") {
        const auto lam = singular_values(truncation_of(lebesgue(), 1));
        REQUIRE(lam.size() == 1);
        REQUIRE(lam[0] == Catch::Approx(1.0).margin(1e-15));
    }

    SECTION("three-by-three classical matrix vs its characteristic cubic") {
        // trace 23/15, principal 2x2 minors sum 127/720, determinant 1/2160
        const double c2 = 23.0 / 15.0, c1 = 127.0 / 720.0, c0 = 1.0 / 2160.0;
        const double r0 = cubic_root(c2, c1, c0, 0.5, 2.0);
        const double r1 = cubic_root(c2, c1, c0, 0.01, 0.5);
        const double r2 = cubic_root(c2, c1, c0, 0.0, 0.01);
        const auto lam = singular_values(truncation_of(lebesgue(), 3));
        REQUIRE(lam[0] == Catch::Approx(r0).epsilon(1e-12));
        REQUIRE(lam[1] == Catch::Approx(r1).epsilon(1e-12));
        REQUIRE(lam[2] == Catch::Approx(r2).epsilon(1e-10));
    }
}

TEST_CASE("squared 2-norm equals the entrywise square sum", "[schatten]") {
    SECTION("constant density, direct entry oracle") {
        double direct = 0.0;
        for (int n = 0; n < 64; ++n)
            for (int k = 0; k < 64; ++k) direct += 1.0 / ((n + k + 1.0) * (n + k + 1.0));
        const double nrm = schatten_pnorm(truncation_of(lebesgue(), 64), 2.0);
        REQUIRE(nrm == Catch::Approx(std::sqrt(direct)).epsilon(1e-12));
    }

    SECTION("identity holds across families") {
        AtomicMeasure atoms;
        atoms.points = {0.1, 0.5, 0.9};
        atoms.weights = {0.3, 1.0, 0.2};
        PowerWeight soft;
        soft.gamma = -0.5;
        PowerWeight hard;
        hard.gamma = 1.0;
        LogPowerWeight logw;
        logw.s = 1.0;
        logw.alpha = 2.0;
        const std::vector<Measure> fams = {lebesgue(), Measure(soft), Measure(hard),
                                           Measure(atoms), Measure(logw)};
        for (const auto& mu : fams) {
            const auto T = truncation_of(mu, 512);
            double direct = 0.0;
            for (int n = 0; n < 512; ++n)
                for (int k = 0; k < 512; ++k) direct += T.entry(n, k) * T.entry(n, k);
            const double nrm = schatten_pnorm(T, 2.0);
            REQUIRE(nrm * nrm == Catch::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("criterion partial sums match closed forms", "[schatten]") {
    SECTION("constant density at p = 2 gives harmonic numbers") {
        const auto ms = moments_up_to(lebesgue(), 63);
        REQUIRE(criterion_sum(ms, 2.0, 8) == Catch::Approx(761.0 / 280.0).epsilon(1e-14));
        double h64 = 0.0;
        for (int n = 1; n <= 64; ++n) h64 += 1.0 / n;
        REQUIRE(criterion_sum(ms, 2.0, 64) == Catch::Approx(h64).epsilon(1e-14));
    }

    SECTION("single atom at 1/2, p = 2, geometric-derivative limit 16/9") {
        AtomicMeasure atom;
        atom.points = {0.5};
        atom.weights = {1.0};
        const auto ms = moments_up_to(Measure(atom), 63);
        REQUIRE(criterion_sum(ms, 2.0, 64) == Catch::Approx(16.0 / 9.0).epsilon(1e-13));
    }

    SECTION("summable family stabilizes under doubling") {
        PowerWeight pw;
        pw.gamma = 1.0;
        const auto ms = moments_up_to(Measure(pw), 511);
        const double s256 = criterion_sum(ms, 2.0, 256);
        const double s512 = criterion_sum(ms, 2.0, 512);
        REQUIRE(s512 > s256);
        REQUIRE((s512 - s256) / s512 < 1e-3);
    }

    SECTION("validation") {
        const auto ms = moments_up_to(lebesgue(), 7);
        REQUIRE_THROWS_AS(criterion_sum(ms, 2.0, 9), std::invalid_argument);
        REQUIRE_THROWS_AS(criterion_sum(ms, 1.0, 4), std::invalid_argument);
        REQUIRE_THROWS_AS(criterion_sum(ms, 2.0, 0), std::invalid_argument);
    }
}

TEST_CASE("truncation spectra interlace upward", "[schatten]") {
    PowerWeight pw;
    pw.gamma = 0.5;
    AtomicMeasure atoms;
    atoms.points = {0.25, 0.75};
    atoms.weights = {1.0, 0.5};
    const std::vector<Measure> fams = {lebesgue(), Measure(pw), Measure(atoms)};
    for (const auto& mu : fams) {
        for (int n : {32, 256}) {
            const auto lo = singular_values(truncation_of(mu, n));
            const auto hi = singular_values(truncation_of(mu, 2 * n));
            for (int k = 0; k < n; ++k) REQUIRE(lo[k] <= hi[k] + 1e-12);
        }
    }
}

TEST_CASE("membership verdicts match known class membership", "[schatten]") {
    SECTION("decaying power weight lies in the class") {
        PowerWeight pw;
        pw.gamma = 1.0;
        const auto v = membership_verdict(Measure(pw), 2.0);
        REQUIRE(v.verdict == "in_Sp");
        REQUIRE(v.evidence.size() == 4);
        REQUIRE(v.evidence.back().N == 1024);
    }

    SECTION("constant density stays outside for every p, log-speed growth") {
        const auto v = membership_verdict(lebesgue(), 2.0);
        REQUIRE(v.verdict == "not_in_Sp");
        REQUIRE(v.spectral_slope == Catch::Approx(1.0).margin(0.2));
        REQUIRE(v.criterion_slope == Catch::Approx(1.0).margin(0.2));
    }

    SECTION("finite rank is inside for every p") {
        AtomicMeasure atom;
        atom.points = {0.5};
        atom.weights = {1.0};
        for (double p : {1.5, 3.0}) {
            const auto v = membership_verdict(Measure(atom), p, {64, 128, 256, 512});
            REQUIRE(v.verdict == "in_Sp");
        }
    }

    SECTION("spectral and criterion tracks agree across families") {
        PowerWeight g0;
        g0.gamma = 0.0;
        PowerWeight gh;
        gh.gamma = 0.5;
        PowerWeight g1;
        g1.gamma = 1.0;
        AtomicMeasure atom;
        atom.points = {0.5};
        atom.weights = {1.0};
        LogPowerWeight logw;
        logw.s = 1.0;
        logw.alpha = 2.0;
        const std::vector<Measure> fams = {Measure(g0), Measure(gh), Measure(g1),
                                           Measure(atom), Measure(logw)};
        const std::vector<int> ladder = {64, 128, 256, 512};
        for (const auto& mu : fams) {
            for (double p : {1.5, 2.0, 3.0}) {
                const auto v = membership_verdict(mu, p, ladder);
                INFO(family_name(mu) << " p=" << p << " spectral_inc=" << v.spectral_increment
                                     << " criterion_inc=" << v.criterion_increment);
                REQUIRE(v.spectral_flat == v.criterion_flat);
                REQUIRE(v.verdict != "boundary");
            }
        }
    }

    SECTION("evidence partial sums are monotone in N") {
        const auto v = membership_verdict(lebesgue(), 1.5, {64, 128, 256, 512});
        for (std::size_t i = 1; i < v.evidence.size(); ++i) {
            REQUIRE(v.evidence[i].schatten_partial >= v.evidence[i - 1].schatten_partial);
            REQUIRE(v.evidence[i].criterion_partial > v.evidence[i - 1].criterion_partial);
        }
        for (const auto& rep : v.evidence)
            REQUIRE(std::is_sorted(rep.singular_values.rbegin(), rep.singular_values.rend()));
    }

    SECTION("validation") {
        REQUIRE_THROWS_AS(membership_verdict(lebesgue(), 1.0), std::invalid_argument);
        REQUIRE_THROWS_AS(membership_verdict(lebesgue(), 2.0, {128, 256}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(membership_verdict(lebesgue(), 2.0, {128, 256, 384}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(membership_verdict(lebesgue(), 2.0, {1024, 2048, 4096}),
                          std::invalid_argument);
        const auto ms = moments_up_to(lebesgue(), 2 * 2049 - 2);
        REQUIRE_THROWS_AS(singular_values(HankelTruncation(ms, 2049)),
                          std::invalid_argument);
    }
}

TEST_CASE("dyadic block sums track the moment criterion within a fixed band",
          "[schatten]") {
    // the block sum is built from k mu_{k+1}, so it never sees mu_0 or mu_1;
    // the tracking statement compares it after adding back the two head terms
    // of the criterion it cannot reach
    PowerWeight gh;
    gh.gamma = 0.5;
    PowerWeight g1;
    g1.gamma = 1.0;
    LogPowerWeight logw;
    logw.s = 1.0;
    logw.alpha = 2.0;
    AtomicMeasure atom;
    atom.points = {0.5};
    atom.weights = {1.0};
    const std::vector<Measure> fams = {lebesgue(), Measure(gh), Measure(g1), Measure(logw),
                                       Measure(atom)};
    for (const auto& mu : fams) {
        const auto ms = moments_up_to(mu, 1024);
        for (double p : {1.5, 2.0, 3.0}) {
            const double head = std::pow(ms.values[0], p) +
                                std::pow(2.0, p - 1.0) * std::pow(ms.values[1], p);
            const double bridge = head + dyadic_block_besov(ms, p, 9);
            const double crit = criterion_sum(ms, p, 1024);
            INFO(family_name(mu) << " p=" << p << " bridge=" << bridge << " crit=" << crit);
            REQUIRE(bridge > 0.0);
            REQUIRE(crit / bridge <= 16.0);
            REQUIRE(bridge / crit <= 16.0);
        }
    }

    SECTION("a unit atom at the origin is invisible past the head") {
        AtomicMeasure origin;
        origin.points = {0.0};
        origin.weights = {1.0};
        const auto ms = moments_up_to(Measure(origin), 1024);
        REQUIRE(dyadic_block_besov(ms, 2.0, 6) == 0.0);
        REQUIRE(criterion_sum(ms, 2.0, 1024) == Catch::Approx(1.0).margin(1e-15));
    }
}
