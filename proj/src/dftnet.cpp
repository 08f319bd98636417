#include "ofdmnet/dftnet.hpp"

#include <cmath>

namespace models {

DftNet dftnet_analytic_init(const ofdm::FrameConfig& cfg, DftNet::Dir dir) {
    const int n = cfg.n_fft, cp = cfg.cp_len, s = cfg.sym_len();
    DftNet net;
    net.dir = dir;
    net.side = s;
    net.lin_r = nn::Affine::zeros(s, s);
    net.lin_i = nn::Affine::zeros(s, s);
    net.bn_r = nn::BatchNorm::identity(s);
    net.bn_i = nn::BatchNorm::identity(s);
    net.mix = nn::MixConv::zeros(2, 4);

    if (dir == DftNet::Dir::Forward) {
        // Row k of the kernel applies the N-point transform to the last N
        // samples (the CP region is ignored); rows >= N stay zero.
        for (int k = 0; k < n; ++k)
            for (int t = 0; t < n; ++t) {
                double ang = 2.0 * M_PI * double(k) * double(t) / double(n);
                net.lin_r.W.at2(k, cp + t) = std::cos(ang);
                net.lin_i.W.at2(k, cp + t) = std::sin(ang);
            }
        // Re(Y) = u1 + u4, Im(Y) = u2 - u3
        net.mix.M.at2(0, 0) = 1.0;
        net.mix.M.at2(0, 3) = 1.0;
        net.mix.M.at2(1, 1) = 1.0;
        net.mix.M.at2(1, 2) = -1.0;
    } else {
        // Output index o covers CP (first cp samples, copies of the symbol
        // tail) then the symbol; input cols >= N are ignored.
        for (int o = 0; o < s; ++o) {
            int t = (o < cp) ? (n - cp + o) : (o - cp);
            for (int k = 0; k < n; ++k) {
                double ang = 2.0 * M_PI * double(k) * double(t) / double(n);
                net.lin_r.W.at2(o, k) = std::cos(ang) / double(n);
                net.lin_i.W.at2(o, k) = std::sin(ang) / double(n);
            }
        }
        // Re(x) = u1 - u4, Im(x) = u2 + u3
        net.mix.M.at2(0, 0) = 1.0;
        net.mix.M.at2(0, 3) = -1.0;
        net.mix.M.at2(1, 1) = 1.0;
        net.mix.M.at2(1, 2) = 1.0;
    }
    return net;
}

nn::Tensor dftnet_forward(DftNet& net, const nn::Tensor& x, nn::Mode mode,
                          DftNetTape* tape) {
    if (x.ndim() != 2 || x.dim(1) != net.side || x.dim(0) % 2 != 0)
        throw std::invalid_argument("dftnet_forward: x shape " + x.shape_str());
    const int rows = x.dim(0), s = net.side, syms = rows / 2;

    DftNetTape local;
    DftNetTape& tp = tape ? *tape : local;
    tp.x = x;
    tp.ar = nn::affine_forward(net.lin_r, x);
    tp.ai = nn::affine_forward(net.lin_i, x);
    nn::Tensor hr = nn::bn_forward(net.bn_r, tp.ar, mode, &tp.bnr);
    nn::Tensor hi = nn::bn_forward(net.bn_i, tp.ai, mode, &tp.bni);

    // u channels per symbol: [Wr*re, Wr*im, Wi*re, Wi*im]
    tp.u = nn::Tensor({syms, 4, s});
    for (int t = 0; t < syms; ++t)
        for (int c = 0; c < s; ++c) {
            tp.u.at3(t, 0, c) = hr.at2(2 * t, c);
            tp.u.at3(t, 1, c) = hr.at2(2 * t + 1, c);
            tp.u.at3(t, 2, c) = hi.at2(2 * t, c);
            tp.u.at3(t, 3, c) = hi.at2(2 * t + 1, c);
        }

    nn::Tensor y4 = nn::mixconv_forward(net.mix, tp.u);
    nn::Tensor y({rows, s});
    for (int t = 0; t < syms; ++t)
        for (int c = 0; c < s; ++c) {
            y.at2(2 * t, c) = y4.at3(t, 0, c);
            y.at2(2 * t + 1, c) = y4.at3(t, 1, c);
        }
    return y;
}

nn::Tensor dftnet_backward(DftNet& net, const DftNetTape& tape,
                           const nn::Tensor& dy, DftNetGrads* grads) {
    const int rows = dy.dim(0), s = net.side, syms = rows / 2;

    nn::Tensor dy4({syms, 2, s});
    for (int t = 0; t < syms; ++t)
        for (int c = 0; c < s; ++c) {
            dy4.at3(t, 0, c) = dy.at2(2 * t, c);
            dy4.at3(t, 1, c) = dy.at2(2 * t + 1, c);
        }

    nn::Tensor du = nn::mixconv_backward(net.mix, tape.u, dy4,
                                         grads ? &grads->mix : nullptr);

    nn::Tensor dhr({rows, s}), dhi({rows, s});
    for (int t = 0; t < syms; ++t)
        for (int c = 0; c < s; ++c) {
            dhr.at2(2 * t, c) = du.at3(t, 0, c);
            dhr.at2(2 * t + 1, c) = du.at3(t, 1, c);
            dhi.at2(2 * t, c) = du.at3(t, 2, c);
            dhi.at2(2 * t + 1, c) = du.at3(t, 3, c);
        }

    nn::Tensor dar = nn::bn_backward(net.bn_r, tape.bnr, dhr,
                                     grads ? &grads->bn_r : nullptr);
    nn::Tensor dai = nn::bn_backward(net.bn_i, tape.bni, dhi,
                                     grads ? &grads->bn_i : nullptr);

    nn::Tensor dx_r = nn::affine_backward(net.lin_r, tape.x, dar,
                                          grads ? &grads->lin_r : nullptr);
    nn::Tensor dx_i = nn::affine_backward(net.lin_i, tape.x, dai,
                                          grads ? &grads->lin_i : nullptr);
    for (long i = 0; i < dx_r.numel(); ++i) dx_r.data[i] += dx_i.data[i];
    return dx_r;
}

std::vector<std::pair<std::string, nn::Tensor*>> dftnet_params(DftNet& net) {
    return {
        {"lin_r.W", &net.lin_r.W},       {"lin_r.b", &net.lin_r.b},
        {"lin_i.W", &net.lin_i.W},       {"lin_i.b", &net.lin_i.b},
        {"bn_r.gamma", &net.bn_r.gamma}, {"bn_r.beta", &net.bn_r.beta},
        {"bn_i.gamma", &net.bn_i.gamma}, {"bn_i.beta", &net.bn_i.beta},
        {"mix.M", &net.mix.M},           {"mix.b", &net.mix.b},
    };
}

} // namespace models
