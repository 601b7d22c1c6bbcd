#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hilbertmu/hardy.hpp"
#include "hilbertmu/measure.hpp"

using namespace hmu;
using cd = std::complex<double>;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cd> c(degree + 1);
    for (auto& x : c) x = cd(g(rng), g(rng));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial evaluation", "[hardy]") {
    const Polynomial f(std::vector<double>{1.0, 2.0, 3.0});
    CHECK(std::abs(f(cd(0.5, 0.0)) - cd(2.75, 0.0)) < 1e-15);
    CHECK(std::abs(f(cd(0.0, 0.0)) - cd(1.0, 0.0)) < 1e-15);
    CHECK(f.degree() == 2);
    CHECK(Polynomial(std::vector<double>{0.0, 0.0}).degree() == -1);
}

TEST_CASE("integral means at hand-checked points", "[hardy]") {
    const Polynomial z(std::vector<double>{0.0, 1.0});
    CHECK(std::abs(integral_means(z, 0.5, 2.0) - 0.5) < 1e-13);

    const Polynomial f(std::vector<double>{3.0, 4.0});
    CHECK(std::abs(integral_means(f, 1.0, 2.0) - 5.0) < 1e-12);

    const Polynomial ones(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    CHECK(std::abs(integral_means(ones, 1.0, 2.0) - 2.0) < 1e-12);

    // at r = 0 every mean collapses to |a_0|
    for (double p : {0.5, 1.0, 2.0, 3.0})
        CHECK(std::abs(integral_means(f, 0.0, p) - 3.0) < 1e-13);

    CHECK_THROWS_AS(integral_means(ones, 0.5, 2.0, 24), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(integral_means(ones, 0.5, 2.0, 16), std::invalid_argument);  // too few samples
    CHECK_THROWS_AS(integral_means(ones, 1.5, 2.0), std::invalid_argument);
}

TEST_CASE("boundary mean matches Parseval at p = 2", "[hardy]") {
    std::mt19937_64 rng(7101);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_poly(rng, 1 + static_cast<int>(rng() % 40));
        double sum = 0.0;
        for (const auto& c : f.coeffs) sum += std::norm(c);
        const double n2 = hp_norm(f, 2.0);
        CHECK(std::abs(n2 * n2 - sum) <= 1e-12 * sum);
    }
}

TEST_CASE("integral means grow with the radius", "[hardy]") {
    std::mt19937_64 rng(40411);
    const std::vector<double> rs = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.97, 1.0};
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_poly(rng, 1 + static_cast<int>(rng() % 24));
        for (double p : {0.5, 1.0, 2.0, 4.0}) {
            const auto prof = radial_profile(f, p, rs);
            for (std::size_t j = 0; j + 1 < prof.mean.size(); ++j)
                CHECK(prof.mean[j] <= prof.mean[j + 1] * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("mixed-norm integral against analytic values", "[hardy]") {
    CHECK(std::abs(bq_norm(Polynomial(std::vector<double>{1.0}), 0.5) - 1.0) < 1e-9);
    CHECK(std::abs(bq_norm(Polynomial(std::vector<double>{0.0, 1.0}), 0.5) - 0.5) < 1e-9);
    CHECK(std::abs(bq_norm(Polynomial(std::vector<double>{1.0}), 2.0 / 3.0) - 2.0) < 1e-9);
    CHECK_THROWS_AS(bq_norm(Polynomial(std::vector<double>{1.0}), 1.0), std::invalid_argument);
}

TEST_CASE("Besov integral against analytic values", "[hardy]") {
    // constant: only the |g(0)|^p term survives
    CHECK(std::abs(besov_norm(Polynomial(std::vector<double>{2.5}), 1.7) -
                   std::pow(2.5, 1.7)) < 1e-12);
    // g = z, p = 2: integrand is 1 over the disc -> area pi
    CHECK(std::abs(besov_norm(Polynomial(std::vector<double>{0.0, 1.0}), 2.0) - M_PI) < 1e-9);
    // g = z^2, p = 2: |g'|^2 = 4 r^2 -> 2 pi
    CHECK(std::abs(besov_norm(Polynomial(std::vector<double>{0.0, 0.0, 1.0}), 2.0) - 2.0 * M_PI) <
          1e-8);
    CHECK_THROWS_AS(besov_norm(Polynomial(std::vector<double>{1.0}), 1.0), std::invalid_argument);
}

TEST_CASE("dyadic block sums", "[hardy]") {
    // unit mass at the origin: every block coefficient mu_{k+1} vanishes
    const auto seq0 = moments_up_to(AtomicMeasure{{0.0}, {1.0}}, 200);
    CHECK(dyadic_block_besov(seq0, 2.0, 5) == 0.0);

    // p = 2 collapses to an explicit coefficient sum
    const auto leb = moments_up_to(lebesgue(), 128);
    double direct = 0.0;
    for (int n = 0; n <= 5; ++n) {
        double block = 0.0;
        for (std::size_t k = std::size_t{1} << n; k < (std::size_t{2} << n); ++k)
            block += std::pow(static_cast<double>(k) * leb.values[k + 1], 2.0);
        direct += std::pow(2.0, -static_cast<double>(n)) * block;
    }
    const double got = dyadic_block_besov(leb, 2.0, 5);
    CHECK(std::abs(got - direct) <= 1e-12 * direct);

    // geometric moments: the first block carries most of the mass
    const auto half = moments_up_to(AtomicMeasure{{0.5}, {1.0}}, 200);
    double total = dyadic_block_besov(half, 2.0, 6);
    double first = dyadic_block_besov(half, 2.0, 0);
    CHECK(first / total >= 0.4);

    CHECK_THROWS_AS(dyadic_block_besov(seq0, 2.0, 7), std::invalid_argument);  // needs mu_256
}

TEST_CASE("dyadic blocks track the Besov integral of the moment tail series", "[hardy]") {
    // h(z) = sum_{n>=1} mu_{n+1} z^n for Lebesgue moments, truncated
    const auto leb = moments_up_to(lebesgue(), 130);
    std::vector<cd> h(128, 0.0);
    for (std::size_t n = 1; n < h.size(); ++n) h[n] = leb.values[n + 1];
    const double bes = besov_norm(Polynomial(std::move(h)), 2.0);
    const double dyadic = dyadic_block_besov(leb, 2.0, 6);
    CHECK(bes / dyadic < 4.0);
    CHECK(dyadic / bes < 4.0);
}

TEST_CASE("kernel family has unit Hardy norm", "[hardy]") {
    for (double p : {0.5, 1.0, 2.0}) {
        for (double b : {0.0, 0.5, 0.9, 0.99}) {
            const auto f = test_fb(b, p);
            CHECK(std::abs(hp_norm(f, p) - 1.0) <= 1e-6);
        }
    }
}

TEST_CASE("kernel family coefficients", "[hardy]") {
    // p = 2: ((1-b^2)/(1-bz)^2)^(1/2) = sqrt(1-b^2) / (1-bz)
    const auto f2 = test_fb(0.5, 2.0);
    const double head2 = std::sqrt(3.0) / 2.0;
    for (int k = 0; k < 6; ++k)
        CHECK(std::abs(f2.coeffs[k].real() - head2 * std::pow(0.5, k)) < 1e-14);

    // p = 1: (1-b^2) (1-bz)^{-2} has coefficients (1-b^2)(k+1) b^k
    const auto f1 = test_fb(0.5, 1.0);
    for (int k = 0; k < 6; ++k)
        CHECK(std::abs(f1.coeffs[k].real() - 0.75 * (k + 1) * std::pow(0.5, k)) < 1e-14);

    CHECK(test_fb(0.0, 0.5).coeffs.size() == 1);
    CHECK_THROWS_AS(test_fb(1.0, 2.0), std::invalid_argument);
}

TEST_CASE("logarithmic family coefficients and values", "[hardy]") {
    const auto g = test_ga(0.5);
    CHECK(std::abs(g.coeffs[0].real() - std::log(2.0)) < 1e-15);
    CHECK(std::abs(g.coeffs[1].real() - 0.5) < 1e-15);
    CHECK(std::abs(g.coeffs[2].real() - 0.125) < 1e-15);
    CHECK(std::abs(g.coeffs[3].real() - 1.0 / 24.0) < 1e-15);
    CHECK(std::abs(g(cd(1.0, 0.0)) - cd(std::log(4.0), 0.0)) < 1e-10);

    const auto g0 = test_ga(0.0);
    CHECK(g0.coeffs.size() == 1);
    CHECK(std::abs(g0.coeffs[0].real() - std::log(2.0)) < 1e-15);
}
