#pragma once
#include "ofdmnet/frame.hpp"
#include "ofdmnet/layers.hpp"

namespace models {

// Trainable replacement for the DFT/IDFT stage: two square linear layers
// (cosine-like and sine-like kernels, each with batch norm) feeding a 2x4
// channel-mix conv. One network instance handles one direction.
struct DftNet {
    enum class Dir { Forward, Inverse };

    Dir dir = Dir::Forward;
    int side = 80; // S = n_fft + cp_len
    nn::Affine lin_r, lin_i;
    nn::BatchNorm bn_r, bn_i;
    nn::MixConv mix; // [2,4]
};

// Exact-equivalence initialization.
// Forward: output row k (< N) applies the N-point transform to the last N
// input samples; rows >= N are zero.
// Inverse: input cols >= N are ignored; output is CP followed by the
// N-point inverse transform (1/N scaling), i.e. a ready-to-send symbol.
DftNet dftnet_analytic_init(const ofdm::FrameConfig& cfg, DftNet::Dir dir);

struct DftNetTape {
    nn::Tensor x;        // [R, S]
    nn::Tensor ar, ai;   // pre-BN linear outputs [R, S]
    nn::BnCache bnr, bni;
    nn::Tensor u;        // [R/2, 4, S]
};

// x rows alternate (re, im) per symbol: row 2t is Re of symbol t.
// Output has the same layout.
nn::Tensor dftnet_forward(DftNet& net, const nn::Tensor& x, nn::Mode mode,
                          DftNetTape* tape = nullptr);

struct DftNetGrads {
    nn::AffineGrads lin_r, lin_i;
    nn::BnGrads bn_r, bn_i;
    nn::MixConvGrads mix;
};

nn::Tensor dftnet_backward(DftNet& net, const DftNetTape& tape,
                           const nn::Tensor& dy, DftNetGrads* grads);

// Parameter registry (pointers into the net, fixed order) for the optimizer
// and the bundle writer.
std::vector<std::pair<std::string, nn::Tensor*>> dftnet_params(DftNet& net);

} // namespace models
