#pragma once
#include "ofdmnet/frame.hpp"

namespace ofdm {

// Gray-labelled unit-energy QAM. m = bits per symbol, one of {1, 2, 4}.
// Layout: the first m/2 bits select the I axis, the rest the Q axis
// (BPSK uses I only). Per-axis Gray code, bit value 0 maps positive:
//   1 bit:  0 -> +1, 1 -> -1
//   2 bits: 00 -> +3, 01 -> +1, 11 -> -1, 10 -> -3   (scaled 1/sqrt(10))
CVec gray_qam_map(const std::vector<uint8_t>& bits, int m);

// Constellation table for order m: point[i] is labelled by the m-bit
// word i (MSB first).
const CVec& constellation(int m);

// Exact per-bit posteriors by Gaussian-likelihood marginalization over the
// constellation. noise_var is the per-component (real/imag) variance.
// Returns hard bits plus soft (p0, p1) pairs.
BitBlock qam_soft_demod(const CVec& symbols, int m, double noise_var);

struct BerCount {
    long errors = 0;
    long total = 0;
    double rate() const { return total ? double(errors) / double(total) : 0.0; }
};

BerCount ber(const BitBlock& a, const BitBlock& b);

} // namespace ofdm
