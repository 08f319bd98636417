#include "ofdmnet/modulation.hpp"

#include <array>
#include <cmath>

namespace ofdm {

namespace {

// Per-axis Gray code, bit value 0 on the positive side.
double axis1(int b) { return b ? -1.0 : 1.0; }
double axis2(int b0, int b1) {
    static const double lvl[4] = {+3.0, +1.0, -1.0, -3.0}; // 00,01,11,10
    int g = (b0 << 1) | (b0 ^ b1); // Gray word -> rank
    return lvl[g];
}

CVec make_constellation(int m) {
    int n = 1 << m;
    CVec pts(n);
    for (int w = 0; w < n; ++w) {
        double re = 0.0, im = 0.0;
        if (m == 1) {
            re = axis1(w & 1);
        } else if (m == 2) {
            re = axis1((w >> 1) & 1) * M_SQRT1_2;
            im = axis1(w & 1) * M_SQRT1_2;
        } else if (m == 4) {
            const double s = 1.0 / std::sqrt(10.0);
            re = axis2((w >> 3) & 1, (w >> 2) & 1) * s;
            im = axis2((w >> 1) & 1, w & 1) * s;
        } else {
            throw std::invalid_argument("constellation: m must be 1, 2 or 4");
        }
        pts[w] = cplx(re, im);
    }
    return pts;
}

} // namespace

const CVec& constellation(int m) {
    static const CVec c1 = make_constellation(1);
    static const CVec c2 = make_constellation(2);
    static const CVec c4 = make_constellation(4);
    switch (m) {
        case 1: return c1;
        case 2: return c2;
        case 4: return c4;
        default: throw std::invalid_argument("constellation: m must be 1, 2 or 4");
    }
}

CVec gray_qam_map(const std::vector<uint8_t>& bits, int m) {
    const CVec& pts = constellation(m);
    if (bits.size() % m != 0)
        throw std::invalid_argument("gray_qam_map: bit count not divisible by m");
    CVec out(bits.size() / m);
    for (size_t i = 0; i < out.size(); ++i) {
        int w = 0;
        for (int j = 0; j < m; ++j) w = (w << 1) | (bits[i * m + j] & 1);
        out[i] = pts[w];
    }
    return out;
}

BitBlock qam_soft_demod(const CVec& symbols, int m, double noise_var) {
    if (noise_var <= 0.0)
        throw std::invalid_argument("qam_soft_demod: noise_var must be > 0");
    const CVec& pts = constellation(m);
    const int n = 1 << m;
    const double inv2v = 1.0 / (2.0 * noise_var);

    BitBlock out;
    out.bits.resize(symbols.size() * m);
    out.soft.resize(symbols.size() * m * 2);

    std::vector<double> ll(n);
    for (size_t i = 0; i < symbols.size(); ++i) {
        double lmax = -HUGE_VAL;
        for (int w = 0; w < n; ++w) {
            double d = std::norm(symbols[i] - pts[w]);
            ll[w] = -d * inv2v;
            lmax = std::max(lmax, ll[w]);
        }
        for (int j = 0; j < m; ++j) {
            double p0 = 0.0, p1 = 0.0;
            int shift = m - 1 - j;
            for (int w = 0; w < n; ++w) {
                double e = std::exp(ll[w] - lmax);
                if ((w >> shift) & 1) p1 += e; else p0 += e;
            }
            double z = p0 + p1;
            p0 /= z;
            p1 /= z;
            size_t bi = i * m + j;
            out.soft[2 * bi] = p0;
            out.soft[2 * bi + 1] = p1;
            out.bits[bi] = p1 > p0 ? 1 : 0;
        }
    }
    return out;
}

BerCount ber(const BitBlock& a, const BitBlock& b) {
    if (a.bits.size() != b.bits.size())
        throw std::invalid_argument("ber: length mismatch");
    BerCount c;
    c.total = (long)a.bits.size();
    for (size_t i = 0; i < a.bits.size(); ++i)
        if ((a.bits[i] & 1) != (b.bits[i] & 1)) ++c.errors;
    return c;
}

} // namespace ofdm
