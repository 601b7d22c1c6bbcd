#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hilbertmu/majorant.hpp"

using namespace hmu;
using cd = std::complex<double>;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cd> c(degree + 1);
    for (auto& x : c) x = cd(g(rng), g(rng));
    return Polynomial(std::move(c));
}

// checks the three defining properties and the factorization identity
void check_majorant(const Polynomial& f) {
    const auto res = majorant(f, 2.0);

    // zero-free on a polar grid of the open disc
    for (int i = 0; i < 32; ++i) {
        const double r = (i + 0.5) / 32.0;
        for (int j = 0; j < 32; ++j)
            CHECK(std::abs(res.F(std::polar(r, 2.0 * M_PI * j / 32.0))) > 0.0);
    }

    // dominates |f| along the radius, and is positive there
    for (int k = 0; k < 64; ++k) {
        const double r = (k + 0.5) / 64.0;
        const double Fr = res.F.eval_real(r);
        CHECK(Fr > 0.0);
        CHECK(std::abs(f(cd(r, 0.0))) <= Fr * (1.0 + 1e-9));
    }

    // removing the inner factor costs nothing at p = 2
    CHECK(std::abs(res.majorant_norm - res.input_norm) <= 1e-8 * res.input_norm);

    // z^m * prod (z - z_i) * outer reproduces the abs-coefficient majorant
    Polynomial recon = res.factorization.outer;
    for (const auto& z : res.factorization.disc_zeros)
        recon = multiply(recon, Polynomial(std::vector<cd>{-z, 1.0}));
    std::vector<cd> shifted(res.factorization.origin_order, 0.0);
    shifted.insert(shifted.end(), recon.coeffs.begin(), recon.coeffs.end());
    double maxc = 0.0, maxdiff = 0.0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        const cd want = std::abs(f.coeffs[k]);
        const cd got = k < shifted.size() ? shifted[k] : cd(0.0);
        maxc = std::max(maxc, std::abs(want));
        maxdiff = std::max(maxdiff, std::abs(got - want));
    }
    CHECK(maxdiff <= 1e-9 * maxc);
    CHECK(res.factorization.max_root_residual <= 1e-8);
}

}  // namespace

TEST_CASE("majorant of monomials and simple shapes", "[majorant]") {
    // f = z: the origin zero divides out completely
    const auto res = majorant(Polynomial(std::vector<double>{0.0, 1.0}), 2.0);
    CHECK(res.factorization.origin_order == 1);
    CHECK(res.factorization.disc_zeros.empty());
    for (double r : {0.1, 0.5, 0.9})
        CHECK(std::abs(res.F.eval_real(r) - 1.0) < 1e-12);
    CHECK(std::abs(res.majorant_norm - 1.0) < 1e-12);

    // f = 1 - z: boundary zero stays in place
    const auto res2 = majorant(Polynomial(std::vector<double>{1.0, -1.0}), 2.0);
    CHECK(res2.factorization.disc_zeros.empty());
    REQUIRE(res2.factorization.boundary_zeros.size() == 1);
    CHECK(std::abs(res2.factorization.boundary_zeros[0] - cd(-1.0, 0.0)) < 1e-9);
    CHECK(std::abs(res2.F.eval_real(0.3) - 1.3) < 1e-12);

    // f = z^2 - 1/4: conjugate pair at +-i/2 is divided out
    const auto res3 = majorant(Polynomial(std::vector<double>{-0.25, 0.0, 1.0}), 2.0);
    CHECK(res3.factorization.disc_zeros.size() == 2);
    check_majorant(Polynomial(std::vector<double>{-0.25, 0.0, 1.0}));
}

TEST_CASE("majorant properties on random polynomials", "[majorant]") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 25; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 16);
        check_majorant(random_poly(rng, deg));
    }
}

TEST_CASE("majorant rejects bad input", "[majorant]") {
    CHECK_THROWS_AS(majorant(Polynomial(std::vector<double>{0.0}), 2.0), std::invalid_argument);
    CHECK_THROWS_AS(majorant(Polynomial(std::vector<double>{1.0}), 0.0), std::invalid_argument);
    std::vector<double> big(66, 1.0);
    CHECK_THROWS_AS(majorant(Polynomial(big), 2.0), std::invalid_argument);
    // factorize_zeros is documented for nonnegative real input only
    CHECK_THROWS_AS(factorize_zeros(Polynomial(std::vector<double>{-1.0, 1.0})),
                    std::invalid_argument);
}
