#include "ofdmnet/adam.hpp"

#include <cmath>

namespace nn {

void AdamState::init(const std::vector<Tensor*>& params, const AdamConfig& c) {
    cfg = c;
    step = 0;
    m.clear();
    v.clear();
    for (const Tensor* p : params) {
        m.emplace_back(p->shape);
        v.emplace_back(p->shape);
    }
}

void adam_step(AdamState& st, const std::vector<Tensor*>& params,
               const std::vector<const Tensor*>& grads) {
    if (params.size() != st.m.size() || grads.size() != params.size())
        throw std::invalid_argument("adam_step: parameter list mismatch");
    st.step += 1;
    const double b1 = st.cfg.beta1, b2 = st.cfg.beta2;
    const double c1 = 1.0 - std::pow(b1, (double)st.step);
    const double c2 = 1.0 - std::pow(b2, (double)st.step);
    for (size_t p = 0; p < params.size(); ++p) {
        Tensor& par = *params[p];
        const Tensor& g = *grads[p];
        if (!par.same_shape(g))
            throw std::invalid_argument("adam_step: grad shape mismatch");
        Tensor& mp = st.m[p];
        Tensor& vp = st.v[p];
        for (long i = 0; i < par.numel(); ++i) {
            double gi = g.data[i];
            mp.data[i] = b1 * mp.data[i] + (1.0 - b1) * gi;
            vp.data[i] = b2 * vp.data[i] + (1.0 - b2) * gi * gi;
            double mhat = mp.data[i] / c1;
            double vhat = vp.data[i] / c2;
            par.data[i] -= st.cfg.lr * mhat / (std::sqrt(vhat) + st.cfg.eps);
        }
    }
}

} // namespace nn
