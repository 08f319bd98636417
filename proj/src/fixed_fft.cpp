#include "ofdmnet/fixed_fft.hpp"

#include <cmath>

namespace ofdm {

namespace {

bool is_pow2(size_t n) { return n && (n & (n - 1)) == 0; }

} // namespace

FixedFft::FixedFft(int total_bits, int int_bits)
    : total_bits_(total_bits), int_bits_(int_bits),
      frac_bits_(total_bits - int_bits) {
    if (total_bits < 4 || total_bits > 28 || int_bits < 1 || int_bits >= total_bits)
        throw std::invalid_argument("FixedFft: bad bit widths");
    qmax_ = (1 << (total_bits_ - 1)) - 1;
    qmin_ = -(1 << (total_bits_ - 1));
}

double FixedFft::lsb() const { return std::ldexp(1.0, -frac_bits_); }

int32_t FixedFft::sat(int64_t v) {
    if (v > qmax_) { ++saturations_; return qmax_; }
    if (v < qmin_) { ++saturations_; return qmin_; }
    return (int32_t)v;
}

int32_t FixedFft::to_fixed(double v) {
    return sat((int64_t)std::llround(v * std::ldexp(1.0, frac_bits_)));
}

// Round-to-nearest shift out of the Q(2f) product domain.
int32_t FixedFft::round_shift(int64_t v) const {
    return (int32_t)((v + (int64_t(1) << (frac_bits_ - 1))) >> frac_bits_);
}

CVec FixedFft::operator()(const CVec& x) {
    const size_t n = x.size();
    if (!is_pow2(n))
        throw std::invalid_argument("FixedFft: length must be a power of two");

    std::vector<int32_t> re(n), im(n);
    {
        // Bit-reversal reorder combined with input quantization.
        std::vector<size_t> idx(n);
        for (size_t i = 1, j = 0; i < n; ++i) {
            size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            idx[i] = j;
        }
        idx[0] = 0;
        for (size_t i = 0; i < n; ++i) {
            re[idx[i]] = to_fixed(x[i].real());
            im[idx[i]] = to_fixed(x[i].imag());
        }
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                double ang = -2.0 * M_PI * double(j) / double(len);
                int32_t wr = to_fixed(std::cos(ang));
                int32_t wi = to_fixed(std::sin(ang));
                size_t lo = i + j, hi = i + j + len / 2;
                // t = w * a[hi], products kept in 64-bit then rounded back.
                int64_t pr = (int64_t)re[hi] * wr - (int64_t)im[hi] * wi;
                int64_t pi = (int64_t)re[hi] * wi + (int64_t)im[hi] * wr;
                int32_t tr = sat(round_shift(pr));
                int32_t ti = sat(round_shift(pi));
                re[hi] = sat((int64_t)re[lo] - tr);
                im[hi] = sat((int64_t)im[lo] - ti);
                re[lo] = sat((int64_t)re[lo] + tr);
                im[lo] = sat((int64_t)im[lo] + ti);
            }
        }
    }

    CVec out(n);
    const double scale = lsb();
    for (size_t i = 0; i < n; ++i)
        out[i] = cplx(re[i] * scale, im[i] * scale);
    return out;
}

} // namespace ofdm
