#pragma once
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ofdm {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

struct BitBlock {
    std::vector<uint8_t> bits;
    // Optional per-bit score pair (p0, p1), flattened; empty or 2*bits.size().
    std::vector<double> soft;
};

// OFDM numerology. The default profile is the 64-point / CP 16 / 8-pilot /
// 8-symbol frame used throughout; guard and pilot bin placement is a fixed
// published convention (counts come from the system configuration, exact
// indices are ours):
//   nulls  = {0, N/2} plus guard_side bins straddling N/2
//   pilots = 8 evenly spaced used bins -> {4, 11, 18, 25, 40, 47, 54, 61}
struct FrameConfig {
    int n_fft = 64;
    int cp_len = 16;
    int pilots_per_sym = 8;
    int guard_side = 8;
    int guard_dc = 2;
    int syms_per_frame = 8;
    int mod_order_bits = 2; // m in {1,2,4}
    double sample_rate_hz = 20e6;
    cplx pilot_value{0.7071067811865476, 0.7071067811865476}; // sqrt(1/2)(1+j)

    int sym_len() const { return n_fft + cp_len; }
    int data_per_sym() const {
        return n_fft - guard_side - guard_dc - pilots_per_sym;
    }
    int data_per_frame() const { return data_per_sym() * syms_per_frame; }
    int bits_per_frame() const { return data_per_frame() * mod_order_bits; }

    // Null (guard) bin indices, ascending.
    std::vector<int> null_indices() const;
    // Pilot bin indices, ascending.
    std::vector<int> pilot_indices() const;
    // Data bin indices, ascending (used bins minus pilots).
    std::vector<int> data_indices() const;

    void validate() const;

    static FrameConfig table_default(int mod_bits = 2);
};

// Frequency-domain frame grid: syms_per_frame rows of n_fft bins.
using FreqGrid = std::vector<CVec>;

// Scatter data symbols into the grid (guards zeroed, pilots inserted).
FreqGrid build_freq_frame(const CVec& data, const FrameConfig& cfg);
// Inverse of build_freq_frame on the data positions.
CVec extract_freq_frame(const FreqGrid& grid, const FrameConfig& cfg);

} // namespace ofdm
