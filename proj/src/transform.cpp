#include "ofdmnet/transform.hpp"

#include <cmath>

namespace ofdm {

namespace {

bool is_pow2(size_t n) { return n && (n & (n - 1)) == 0; }

void bit_reverse_permute(CVec& a) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
}

} // namespace

CVec dft(const CVec& x) {
    const size_t n = x.size();
    if (n == 0) throw std::invalid_argument("dft: empty input");
    CVec X(n);
    for (size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (size_t i = 0; i < n; ++i) {
            double ang = -2.0 * M_PI * double(k) * double(i) / double(n);
            acc += x[i] * cplx(std::cos(ang), std::sin(ang));
        }
        X[k] = acc;
    }
    return X;
}

CVec idft(const CVec& X) {
    const size_t n = X.size();
    if (n == 0) throw std::invalid_argument("idft: empty input");
    CVec x(n);
    for (size_t i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (size_t k = 0; k < n; ++k) {
            double ang = 2.0 * M_PI * double(k) * double(i) / double(n);
            acc += X[k] * cplx(std::cos(ang), std::sin(ang));
        }
        x[i] = acc / double(n);
    }
    return x;
}

CVec fft_radix2(const CVec& x) {
    const size_t n = x.size();
    if (!is_pow2(n))
        throw std::invalid_argument("fft_radix2: length must be a power of two");
    CVec a = x;
    bit_reverse_permute(a);
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = -2.0 * M_PI / double(len);
        cplx wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    return a;
}

CVec ifft_radix2(const CVec& X) {
    CVec c(X.size());
    for (size_t i = 0; i < X.size(); ++i) c[i] = std::conj(X[i]);
    CVec y = fft_radix2(c);
    const double inv = 1.0 / double(X.size());
    for (auto& v : y) v = std::conj(v) * inv;
    return y;
}

} // namespace ofdm
