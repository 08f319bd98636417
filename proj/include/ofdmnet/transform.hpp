#pragma once
#include "ofdmnet/frame.hpp"

namespace ofdm {

// Direct O(N^2) transforms. dft is unscaled, idft carries the 1/N factor.
CVec dft(const CVec& x);
CVec idft(const CVec& X);

// Iterative radix-2 FFT; length must be a power of two. Matches dft().
CVec fft_radix2(const CVec& x);
// Inverse via conjugation; includes the 1/N factor (matches idft()).
CVec ifft_radix2(const CVec& X);

} // namespace ofdm
