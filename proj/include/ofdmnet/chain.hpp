#pragma once
#include "ofdmnet/frame.hpp"
#include "ofdmnet/modulation.hpp"

namespace ofdm {

// Cyclic prefix: copy the last cp_len samples to the front.
CVec add_cp(const CVec& sym, const FrameConfig& cfg);
CVec remove_cp(const CVec& sym_cp, const FrameConfig& cfg);

struct AwgnResult {
    CVec samples;
    double noise_var = 0.0; // per complex sample (both components together)
    double signal_power = 0.0;
};

// Circularly-symmetric Gaussian noise at the requested SNR, where SNR is
// defined against the measured power of x. Deterministic per seed.
AwgnResult awgn(const CVec& x, double snr_db, uint64_t seed);

enum class RxArith { Fp, Fixed16 };

// bits -> map -> frame grid -> idft (1/N) -> CP, concatenated over the frame.
CVec conventional_tx(const std::vector<uint8_t>& bits, const FrameConfig& cfg);

// CP removal -> FFT -> pilot/guard strip -> exact soft demod -> hard bits.
// noise_var is the per-complex-sample time-domain variance (as reported by
// awgn); pass 0 for a noiseless run.
BitBlock conventional_rx(const CVec& samples, const FrameConfig& cfg,
                         double noise_var, RxArith arith = RxArith::Fp,
                         long* fixed_saturations = nullptr);

} // namespace ofdm
