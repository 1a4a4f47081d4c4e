#ifndef FRFTLAB_FFT_HPP
#define FRFTLAB_FFT_HPP

#include <cstddef>
#include <vector>

#include "frftlab/types.hpp"

namespace frftlab {

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 FFT; size must be a power of two. Inverse scales by 1/N.
void fft_pow2(std::vector<cplx>& a, bool inverse);

/// Full linear convolution of a and b (length a+b-1) via zero-padded FFT.
std::vector<cplx> fft_linear_convolve(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// S_k = sum_j g_j exp(-2*pi*i*(y0 + k*hy)*(t0 + j*ht)), k = 0..m-1.
/// Bluestein factorization; O((n+m) log(n+m)). Steps may be negative.
std::vector<cplx> chirpz_sum(const std::vector<cplx>& g, double t0, double ht, double y0,
                             double hy, std::size_t m);

}  // namespace frftlab

#endif
