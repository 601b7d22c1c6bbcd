#pragma once

// Analytic polynomials stored as Taylor coefficient vectors a_0..a_{N-1}.
// These stand in for H^p functions throughout: test inputs, truncated
// operator images and dyadic coefficient blocks are all Polynomials.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hmu {

struct Polynomial {
    std::vector<std::complex<double>> coeffs;

    Polynomial() : coeffs(1, 0.0) {}
    explicit Polynomial(std::vector<std::complex<double>> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("polynomial: need at least one coefficient");
    }
    explicit Polynomial(const std::vector<double>& c) {
        if (c.empty()) throw std::invalid_argument("polynomial: need at least one coefficient");
        coeffs.assign(c.begin(), c.end());
    }

    // largest index with a nonzero coefficient; -1 for the zero polynomial
    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != std::complex<double>(0.0)) return static_cast<int>(i);
        return -1;
    }

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    }
};

inline Polynomial derivative(const Polynomial& f) {
    if (f.coeffs.size() <= 1) return Polynomial{};
    std::vector<std::complex<double>> d(f.coeffs.size() - 1);
    for (std::size_t k = 1; k < f.coeffs.size(); ++k)
        d[k - 1] = static_cast<double>(k) * f.coeffs[k];
    return Polynomial(std::move(d));
}

inline Polynomial multiply(const Polynomial& f, const Polynomial& g) {
    std::vector<std::complex<double>> out(f.coeffs.size() + g.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] += f.coeffs[i] * g.coeffs[j];
    return Polynomial(std::move(out));
}

}  // namespace hmu
