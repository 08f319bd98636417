#pragma once
#include "ofdmnet/tensor.hpp"

namespace nn {

enum class Mode { Train, Eval };

// ---------------------------------------------------------------- affine

struct Affine {
    Tensor W; // [out, in]
    Tensor b; // [out]
    int in() const { return W.dim(1); }
    int out() const { return W.dim(0); }
    static Affine zeros(int out, int in);
};

struct AffineGrads {
    Tensor dW, db;
};

// x: [B, in] -> [B, out]
Tensor affine_forward(const Affine& a, const Tensor& x);
// Returns dx; fills grads if non-null.
Tensor affine_backward(const Affine& a, const Tensor& x, const Tensor& dy,
                       AffineGrads* grads);

// ------------------------------------------------------------- batchnorm

struct BatchNorm {
    Tensor gamma, beta;            // [C]
    Tensor running_mu, running_var; // [C]
    double eps = 1e-5;
    double momentum = 0.1; // weight of the new batch in the running stats
    int channels() const { return gamma.dim(0); }
    static BatchNorm identity(int channels);
};

struct BnCache {
    Tensor x_hat;    // [B, C]
    Tensor inv_std;  // [C]
    Mode mode = Mode::Train;
};

// x: [B, C]. Train mode uses biased batch statistics and updates the
// running stats; eval mode uses the running stats.
Tensor bn_forward(BatchNorm& bn, const Tensor& x, Mode mode, BnCache* cache);
struct BnGrads {
    Tensor dgamma, dbeta;
};
Tensor bn_backward(const BatchNorm& bn, const BnCache& cache, const Tensor& dy,
                   BnGrads* grads);

// --------------------------------------------------- 1x1 channel mix conv

struct MixConv {
    Tensor M; // [out_ch, in_ch]
    Tensor b; // [out_ch]
    int in_ch() const { return M.dim(1); }
    int out_ch() const { return M.dim(0); }
    static MixConv zeros(int out_ch, int in_ch);
};

struct MixConvGrads {
    Tensor dM, db;
};

// x: [B, Cin, L] -> [B, Cout, L]; y[b,o,l] = sum_i M[o,i] x[b,i,l] + b[o]
Tensor mixconv_forward(const MixConv& c, const Tensor& x);
Tensor mixconv_backward(const MixConv& c, const Tensor& x, const Tensor& dy,
                        MixConvGrads* grads);

// ------------------------------------------------------------ activations

Tensor leaky_relu(const Tensor& x, double slope);
Tensor leaky_relu_backward(const Tensor& x, const Tensor& dy, double slope);

Tensor sigmoid(const Tensor& x);
// y is the sigmoid output.
Tensor sigmoid_backward(const Tensor& y, const Tensor& dy);

// Mean elementwise binary cross entropy; probs are clamped to
// [1e-7, 1-1e-7] inside the logs. Returns the loss, fills dprobs.
double bce_loss(const Tensor& probs, const Tensor& targets, Tensor* dprobs);

} // namespace nn
