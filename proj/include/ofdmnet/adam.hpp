#pragma once
#include "ofdmnet/tensor.hpp"

#include <vector>

namespace nn {

struct AdamConfig {
    double lr = 0.003;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    AdamConfig cfg;
    std::vector<Tensor> m, v; // first/second moments, one per parameter
    long step = 0;

    void init(const std::vector<Tensor*>& params, const AdamConfig& c);
};

// Standard bias-corrected update; params and grads must line up with init.
void adam_step(AdamState& st, const std::vector<Tensor*>& params,
               const std::vector<const Tensor*>& grads);

} // namespace nn
