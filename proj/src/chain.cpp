#include "ofdmnet/chain.hpp"

#include "ofdmnet/fixed_fft.hpp"
#include "ofdmnet/rng.hpp"
#include "ofdmnet/transform.hpp"

#include <cmath>

namespace ofdm {

CVec add_cp(const CVec& sym, const FrameConfig& cfg) {
    if ((int)sym.size() != cfg.n_fft)
        throw std::invalid_argument("add_cp: symbol length != n_fft");
    CVec out;
    out.reserve(cfg.sym_len());
    out.insert(out.end(), sym.end() - cfg.cp_len, sym.end());
    out.insert(out.end(), sym.begin(), sym.end());
    return out;
}

CVec remove_cp(const CVec& sym_cp, const FrameConfig& cfg) {
    if ((int)sym_cp.size() != cfg.sym_len())
        throw std::invalid_argument("remove_cp: length != sym_len");
    return CVec(sym_cp.begin() + cfg.cp_len, sym_cp.end());
}

AwgnResult awgn(const CVec& x, double snr_db, uint64_t seed) {
    if (x.empty()) throw std::invalid_argument("awgn: empty input");
    double p = 0.0;
    for (const auto& v : x) p += std::norm(v);
    p /= double(x.size());

    AwgnResult r;
    r.signal_power = p;
    r.noise_var = p / std::pow(10.0, snr_db / 10.0);
    r.samples.resize(x.size());
    const double comp_sigma = std::sqrt(r.noise_var / 2.0);
    rng::Stream rs(seed);
    for (size_t i = 0; i < x.size(); ++i) {
        auto [a, b] = rs.next_normal_pair();
        r.samples[i] = x[i] + cplx(a * comp_sigma, b * comp_sigma);
    }
    return r;
}

CVec conventional_tx(const std::vector<uint8_t>& bits, const FrameConfig& cfg) {
    if ((int)bits.size() != cfg.bits_per_frame())
        throw std::invalid_argument("conventional_tx: bit count != frame capacity");
    CVec data = gray_qam_map(bits, cfg.mod_order_bits);
    FreqGrid grid = build_freq_frame(data, cfg);
    CVec out;
    out.reserve(cfg.sym_len() * cfg.syms_per_frame);
    for (const auto& row : grid) {
        CVec t = ifft_radix2(row);
        CVec tc = add_cp(t, cfg);
        out.insert(out.end(), tc.begin(), tc.end());
    }
    return out;
}

BitBlock conventional_rx(const CVec& samples, const FrameConfig& cfg,
                         double noise_var, RxArith arith,
                         long* fixed_saturations) {
    const int S = cfg.sym_len();
    if ((int)samples.size() != S * cfg.syms_per_frame)
        throw std::invalid_argument("conventional_rx: length != frame samples");

    FixedFft ffx(16, 2);
    FreqGrid grid(cfg.syms_per_frame);
    for (int s = 0; s < cfg.syms_per_frame; ++s) {
        CVec sym(samples.begin() + (size_t)s * S,
                 samples.begin() + (size_t)(s + 1) * S);
        CVec t = remove_cp(sym, cfg);
        grid[s] = (arith == RxArith::Fp) ? fft_radix2(t) : ffx(t);
    }
    if (fixed_saturations) *fixed_saturations = ffx.saturations();

    CVec data = extract_freq_frame(grid, cfg);
    // Unscaled N-point FFT turns per-sample noise_var into N*noise_var per
    // bin; per-component variance is half of that.
    double bin_var = std::max(noise_var, 1e-300) * cfg.n_fft / 2.0;
    return qam_soft_demod(data, cfg.mod_order_bits, bin_var);
}

} // namespace ofdm
