#pragma once
#include "ofdmnet/frame.hpp"
#include "ofdmnet/layers.hpp"

namespace models {

// Frame-level soft demodulator: linear feature extraction (one joint layer
// in variant 1, separate real/imag layers in variant 2), LeakyReLU branch
// concatenation, 2x4 channel mix, sigmoid over two scores per bit.
struct DemodNet {
    int variant = 1;
    double slope = 0.125; // LeakyReLU negative slope (power of two)
    int fs = 640;         // per-channel input length F*S
    int dm = 736;         // data bits per frame D*m

    nn::Affine lin;             // variant 1: [2*dm, 2*fs]
    nn::BatchNorm bn;           // variant 1: 2*dm channels
    nn::Affine lin_r, lin_i;    // variant 2: [dm, fs] each
    nn::BatchNorm bn_r, bn_i;   // variant 2
    nn::MixConv mix;            // [2,4]
};

// Uniform +-sqrt(1/fan_in) affine init; mix starts from the forward DFT
// pattern; deterministic per seed.
DemodNet demodnet_init(const ofdm::FrameConfig& cfg, int variant, uint64_t seed);

struct DemodTape {
    nn::Tensor x2;        // [B, 2*fs] (variant 1) or unused
    nn::Tensor xr, xi;    // [B, fs] (variant 2)
    nn::Tensor zr_pre, zi_pre, z_pre; // pre-BN linear outputs
    nn::BnCache bn, bn_r, bn_i;
    nn::Tensor z;         // [B, 2, dm] post-BN features
    nn::Tensor cat;       // [B, 4, dm]
    nn::Tensor scores;    // [B, dm, 2] after sigmoid
};

// x: [B, 2, fs] -> scores [B, dm, 2] in (0,1)
nn::Tensor demod_forward(DemodNet& net, const nn::Tensor& x, nn::Mode mode,
                         DemodTape* tape = nullptr);

struct DemodGrads {
    nn::AffineGrads lin, lin_r, lin_i;
    nn::BnGrads bn, bn_r, bn_i;
    nn::MixConvGrads mix;
};

// dscores: [B, dm, 2] gradient at the sigmoid output; returns dx [B, 2, fs].
nn::Tensor demod_backward(DemodNet& net, const DemodTape& tape,
                          const nn::Tensor& dscores, DemodGrads* grads);

std::vector<std::pair<std::string, nn::Tensor*>> demodnet_params(DemodNet& net);

// Hard decisions from scores: argmax of (p0, p1), ties to 0.
std::vector<uint8_t> hard_bits(const nn::Tensor& scores);

} // namespace models
