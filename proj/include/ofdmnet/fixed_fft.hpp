#pragma once
#include "ofdmnet/frame.hpp"

namespace ofdm {

// Radix-2 FFT in Q(I-1).(W-I) fixed point: inputs, twiddles and every
// butterfly result are rounded to nearest and saturated. Unscaled (same
// convention as dft), so it is only meaningful for small-amplitude inputs
// such as OFDM time frames. Saturation is silent but counted.
class FixedFft {
public:
    explicit FixedFft(int total_bits = 16, int int_bits = 2);

    CVec operator()(const CVec& x);

    long saturations() const { return saturations_; }
    void reset_saturations() { saturations_ = 0; }

    int total_bits() const { return total_bits_; }
    int int_bits() const { return int_bits_; }
    double lsb() const;

private:
    int total_bits_;
    int int_bits_;
    int frac_bits_;
    int32_t qmax_;
    int32_t qmin_;
    long saturations_ = 0;

    int32_t to_fixed(double v);
    int32_t sat(int64_t v);
    int32_t round_shift(int64_t v) const;
};

} // namespace ofdm
