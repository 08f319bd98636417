#include "ofdmnet/layers.hpp"

#include "ofdmnet/kernels.hpp"

#include <cmath>

namespace nn {

Affine Affine::zeros(int out, int in) {
    Affine a;
    a.W = Tensor({out, in});
    a.b = Tensor({out});
    return a;
}

Tensor affine_forward(const Affine& a, const Tensor& x) {
    if (x.ndim() != 2 || x.dim(1) != a.in())
        throw std::invalid_argument("affine_forward: x shape " + x.shape_str());
    const int B = x.dim(0), out = a.out(), in = a.in();
    Tensor y({B, out});
    kernels::gemm_nt(B, out, in, x.ptr(), a.W.ptr(), y.ptr());
    for (int i = 0; i < B; ++i) {
        double* row = y.ptr() + (size_t)i * out;
        for (int j = 0; j < out; ++j) row[j] += a.b.data[j];
    }
    return y;
}

Tensor affine_backward(const Affine& a, const Tensor& x, const Tensor& dy,
                       AffineGrads* grads) {
    const int B = x.dim(0), out = a.out(), in = a.in();
    if (dy.ndim() != 2 || dy.dim(0) != B || dy.dim(1) != out)
        throw std::invalid_argument("affine_backward: dy shape " + dy.shape_str());
    Tensor dx({B, in});
    kernels::gemm_nn(B, in, out, dy.ptr(), a.W.ptr(), dx.ptr());
    if (grads) {
        grads->dW = Tensor({out, in});
        kernels::gemm_tn(B, out, in, dy.ptr(), x.ptr(), grads->dW.ptr());
        grads->db = Tensor({out});
        for (int i = 0; i < B; ++i)
            for (int j = 0; j < out; ++j) grads->db.data[j] += dy.at2(i, j);
    }
    return dx;
}

BatchNorm BatchNorm::identity(int channels) {
    BatchNorm bn;
    bn.gamma = Tensor({channels});
    bn.beta = Tensor({channels});
    bn.running_mu = Tensor({channels});
    bn.running_var = Tensor({channels});
    for (int c = 0; c < channels; ++c) {
        bn.gamma.data[c] = 1.0;
        bn.running_var.data[c] = 1.0 - bn.eps;
    }
    return bn;
}

Tensor bn_forward(BatchNorm& bn, const Tensor& x, Mode mode, BnCache* cache) {
    if (x.ndim() != 2 || x.dim(1) != bn.channels())
        throw std::invalid_argument("bn_forward: x shape " + x.shape_str());
    const int B = x.dim(0), C = x.dim(1);
    if (mode == Mode::Train && B < 2)
        throw std::invalid_argument("bn_forward: train mode needs batch >= 2");

    Tensor mu({C}), var({C});
    if (mode == Mode::Train) {
        for (int i = 0; i < B; ++i)
            for (int c = 0; c < C; ++c) mu.data[c] += x.at2(i, c);
        for (int c = 0; c < C; ++c) mu.data[c] /= B;
        for (int i = 0; i < B; ++i)
            for (int c = 0; c < C; ++c) {
                double d = x.at2(i, c) - mu.data[c];
                var.data[c] += d * d;
            }
        for (int c = 0; c < C; ++c) var.data[c] /= B;
        for (int c = 0; c < C; ++c) {
            bn.running_mu.data[c] = (1.0 - bn.momentum) * bn.running_mu.data[c] +
                                    bn.momentum * mu.data[c];
            bn.running_var.data[c] = (1.0 - bn.momentum) * bn.running_var.data[c] +
                                     bn.momentum * var.data[c];
        }
    } else {
        mu = bn.running_mu;
        var = bn.running_var;
    }

    Tensor inv_std({C});
    for (int c = 0; c < C; ++c) inv_std.data[c] = 1.0 / std::sqrt(var.data[c] + bn.eps);

    Tensor y({B, C});
    Tensor x_hat({B, C});
    for (int i = 0; i < B; ++i)
        for (int c = 0; c < C; ++c) {
            double h = (x.at2(i, c) - mu.data[c]) * inv_std.data[c];
            x_hat.at2(i, c) = h;
            y.at2(i, c) = bn.gamma.data[c] * h + bn.beta.data[c];
        }
    if (cache) {
        cache->x_hat = std::move(x_hat);
        cache->inv_std = std::move(inv_std);
        cache->mode = mode;
    }
    return y;
}

Tensor bn_backward(const BatchNorm& bn, const BnCache& cache, const Tensor& dy,
                   BnGrads* grads) {
    const int B = dy.dim(0), C = dy.dim(1);
    Tensor dgamma({C}), dbeta({C});
    for (int i = 0; i < B; ++i)
        for (int c = 0; c < C; ++c) {
            dgamma.data[c] += dy.at2(i, c) * cache.x_hat.at2(i, c);
            dbeta.data[c] += dy.at2(i, c);
        }

    Tensor dx({B, C});
    if (cache.mode == Mode::Eval) {
        for (int i = 0; i < B; ++i)
            for (int c = 0; c < C; ++c)
                dx.at2(i, c) = dy.at2(i, c) * bn.gamma.data[c] * cache.inv_std.data[c];
    } else {
        // dx = (gamma*inv_std/B) * (B*dy - dbeta - x_hat*dgamma)
        for (int i = 0; i < B; ++i)
            for (int c = 0; c < C; ++c) {
                double t = B * dy.at2(i, c) - dbeta.data[c] -
                           cache.x_hat.at2(i, c) * dgamma.data[c];
                dx.at2(i, c) = bn.gamma.data[c] * cache.inv_std.data[c] * t / B;
            }
    }
    if (grads) {
        grads->dgamma = std::move(dgamma);
        grads->dbeta = std::move(dbeta);
    }
    return dx;
}

MixConv MixConv::zeros(int out_ch, int in_ch) {
    MixConv c;
    c.M = Tensor({out_ch, in_ch});
    c.b = Tensor({out_ch});
    return c;
}

Tensor mixconv_forward(const MixConv& c, const Tensor& x) {
    if (x.ndim() != 3 || x.dim(1) != c.in_ch())
        throw std::invalid_argument("mixconv_forward: x shape " + x.shape_str());
    const int B = x.dim(0), Ci = x.dim(1), Co = c.out_ch(), L = x.dim(2);
    Tensor y({B, Co, L});
    for (int b = 0; b < B; ++b)
        for (int o = 0; o < Co; ++o) {
            double* yo = &y.at3(b, o, 0);
            for (int l = 0; l < L; ++l) yo[l] = c.b.data[o];
            for (int i = 0; i < Ci; ++i) {
                double w = c.M.at2(o, i);
                const double* xi = &x.at3(b, i, 0);
                for (int l = 0; l < L; ++l) yo[l] += w * xi[l];
            }
        }
    return y;
}

Tensor mixconv_backward(const MixConv& c, const Tensor& x, const Tensor& dy,
                        MixConvGrads* grads) {
    const int B = x.dim(0), Ci = x.dim(1), Co = c.out_ch(), L = x.dim(2);
    if (dy.ndim() != 3 || dy.dim(0) != B || dy.dim(1) != Co || dy.dim(2) != L)
        throw std::invalid_argument("mixconv_backward: dy shape " + dy.shape_str());
    Tensor dx({B, Ci, L});
    for (int b = 0; b < B; ++b)
        for (int i = 0; i < Ci; ++i) {
            double* xi = &dx.at3(b, i, 0);
            for (int o = 0; o < Co; ++o) {
                double w = c.M.at2(o, i);
                const double* dyo = &dy.at3(b, o, 0);
                for (int l = 0; l < L; ++l) xi[l] += w * dyo[l];
            }
        }
    if (grads) {
        grads->dM = Tensor({Co, Ci});
        grads->db = Tensor({Co});
        for (int b = 0; b < B; ++b)
            for (int o = 0; o < Co; ++o) {
                const double* dyo = &dy.at3(b, o, 0);
                for (int i = 0; i < Ci; ++i) {
                    const double* xi = &x.at3(b, i, 0);
                    double s0 = 0;
                    for (int l = 0; l < L; ++l) s0 += dyo[l] * xi[l];
                    grads->dM.at2(o, i) += s0;
                }
                for (int l = 0; l < L; ++l) grads->db.data[o] += dyo[l];
            }
    }
    return dx;
}

Tensor leaky_relu(const Tensor& x, double slope) {
    Tensor y = x;
    for (auto& v : y.data) v = v >= 0.0 ? v : slope * v;
    return y;
}

Tensor leaky_relu_backward(const Tensor& x, const Tensor& dy, double slope) {
    Tensor dx = dy;
    for (long i = 0; i < x.numel(); ++i)
        if (x.data[i] < 0.0) dx.data[i] *= slope;
    return dx;
}

Tensor sigmoid(const Tensor& x) {
    Tensor y = x;
    for (auto& v : y.data) v = 1.0 / (1.0 + std::exp(-v));
    return y;
}

Tensor sigmoid_backward(const Tensor& y, const Tensor& dy) {
    Tensor dx = dy;
    for (long i = 0; i < y.numel(); ++i)
        dx.data[i] *= y.data[i] * (1.0 - y.data[i]);
    return dx;
}

double bce_loss(const Tensor& probs, const Tensor& targets, Tensor* dprobs) {
    if (!probs.same_shape(targets))
        throw std::invalid_argument("bce_loss: shape mismatch");
    const double lo = 1e-7, hi = 1.0 - 1e-7;
    const long n = probs.numel();
    double loss = 0.0;
    if (dprobs) *dprobs = Tensor(probs.shape);
    for (long i = 0; i < n; ++i) {
        double p = std::min(std::max(probs.data[i], lo), hi);
        double t = targets.data[i];
        loss += -(t * std::log(p) + (1.0 - t) * std::log(1.0 - p));
        if (dprobs) {
            bool clamped = probs.data[i] < lo || probs.data[i] > hi;
            dprobs->data[i] = clamped ? 0.0 : (p - t) / (p * (1.0 - p)) / n;
        }
    }
    return loss / n;
}

} // namespace nn
