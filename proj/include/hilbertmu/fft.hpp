#pragma once

// Iterative radix-2 complex FFT.  Power-of-two lengths only; that is all
// the circulant embedding and circle sampling in this library need.
// Twiddles come from a per-call table built with one std::polar pass, so
// there is no accumulated rotation drift and no shared mutable state.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hmu::detail {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place transform. sign = -1: forward  X_k = sum_j a_j e^{-2pi i jk/L};
// sign = +1: unnormalized inverse (caller divides by L when inverting).
inline void fft_inplace(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> root(n / 2);
    const double ang = sign * 2.0 * M_PI / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j)
        root[j] = std::polar(1.0, ang * static_cast<double>(j));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> w = root[j * stride];
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

}  // namespace hmu::detail
