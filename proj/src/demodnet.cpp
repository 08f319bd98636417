#include "ofdmnet/demodnet.hpp"

#include "ofdmnet/rng.hpp"

#include <cmath>

namespace models {

namespace {

void uniform_init(nn::Tensor& t, double a, rng::Stream& rs) {
    for (auto& v : t.data) v = rs.next_uniform(-a, a);
}

nn::Affine make_affine(int out, int in, rng::Stream& rs) {
    nn::Affine l = nn::Affine::zeros(out, in);
    double a = std::sqrt(1.0 / in);
    uniform_init(l.W, a, rs);
    uniform_init(l.b, a, rs);
    return l;
}

} // namespace

DemodNet demodnet_init(const ofdm::FrameConfig& cfg, int variant, uint64_t seed) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("demodnet_init: variant must be 1 or 2");
    DemodNet net;
    net.variant = variant;
    net.fs = cfg.sym_len() * cfg.syms_per_frame;
    net.dm = cfg.bits_per_frame();

    rng::Stream rs(seed);
    if (variant == 1) {
        net.lin = make_affine(2 * net.dm, 2 * net.fs, rs);
        net.bn = nn::BatchNorm::identity(2 * net.dm);
    } else {
        net.lin_r = make_affine(net.dm, net.fs, rs);
        net.lin_i = make_affine(net.dm, net.fs, rs);
        net.bn_r = nn::BatchNorm::identity(net.dm);
        net.bn_i = nn::BatchNorm::identity(net.dm);
    }
    net.mix = nn::MixConv::zeros(2, 4);
    net.mix.M.at2(0, 0) = 1.0;
    net.mix.M.at2(0, 3) = 1.0;
    net.mix.M.at2(1, 1) = 1.0;
    net.mix.M.at2(1, 2) = -1.0;
    return net;
}

nn::Tensor demod_forward(DemodNet& net, const nn::Tensor& x, nn::Mode mode,
                         DemodTape* tape) {
    if (x.ndim() != 3 || x.dim(1) != 2 || x.dim(2) != net.fs)
        throw std::invalid_argument("demod_forward: x shape " + x.shape_str());
    const int B = x.dim(0), dm = net.dm, fs = net.fs;

    DemodTape local;
    DemodTape& tp = tape ? *tape : local;

    tp.z = nn::Tensor({B, 2, dm});
    if (net.variant == 1) {
        // [B,2,fs] rows are contiguous: reinterpret as [B, 2*fs]
        tp.x2 = nn::Tensor({B, 2 * fs}, x.data);
        tp.z_pre = nn::affine_forward(net.lin, tp.x2);
        nn::Tensor zb = nn::bn_forward(net.bn, tp.z_pre, mode, &tp.bn);
        tp.z.data = zb.data; // [B, 2*dm] row-major == [B,2,dm]
    } else {
        tp.xr = nn::Tensor({B, fs});
        tp.xi = nn::Tensor({B, fs});
        for (int b = 0; b < B; ++b)
            for (int c = 0; c < fs; ++c) {
                tp.xr.at2(b, c) = x.at3(b, 0, c);
                tp.xi.at2(b, c) = x.at3(b, 1, c);
            }
        tp.zr_pre = nn::affine_forward(net.lin_r, tp.xr);
        tp.zi_pre = nn::affine_forward(net.lin_i, tp.xi);
        nn::Tensor zr = nn::bn_forward(net.bn_r, tp.zr_pre, mode, &tp.bn_r);
        nn::Tensor zi = nn::bn_forward(net.bn_i, tp.zi_pre, mode, &tp.bn_i);
        for (int b = 0; b < B; ++b)
            for (int j = 0; j < dm; ++j) {
                tp.z.at3(b, 0, j) = zr.at2(b, j);
                tp.z.at3(b, 1, j) = zi.at2(b, j);
            }
    }

    // [original ; LeakyReLU(original)] along the channel axis
    tp.cat = nn::Tensor({B, 4, dm});
    for (int b = 0; b < B; ++b)
        for (int j = 0; j < dm; ++j) {
            double z0 = tp.z.at3(b, 0, j), z1 = tp.z.at3(b, 1, j);
            tp.cat.at3(b, 0, j) = z0;
            tp.cat.at3(b, 1, j) = z1;
            tp.cat.at3(b, 2, j) = z0 >= 0.0 ? z0 : net.slope * z0;
            tp.cat.at3(b, 3, j) = z1 >= 0.0 ? z1 : net.slope * z1;
        }

    nn::Tensor y = nn::mixconv_forward(net.mix, tp.cat); // [B,2,dm]

    nn::Tensor pre({B, dm, 2});
    for (int b = 0; b < B; ++b)
        for (int j = 0; j < dm; ++j) {
            pre.at3(b, j, 0) = y.at3(b, 0, j);
            pre.at3(b, j, 1) = y.at3(b, 1, j);
        }
    tp.scores = nn::sigmoid(pre);
    return tp.scores;
}

nn::Tensor demod_backward(DemodNet& net, const DemodTape& tape,
                          const nn::Tensor& dscores, DemodGrads* grads) {
    const int B = dscores.dim(0), dm = net.dm, fs = net.fs;

    nn::Tensor dpre = nn::sigmoid_backward(tape.scores, dscores);
    nn::Tensor dy({B, 2, dm});
    for (int b = 0; b < B; ++b)
        for (int j = 0; j < dm; ++j) {
            dy.at3(b, 0, j) = dpre.at3(b, j, 0);
            dy.at3(b, 1, j) = dpre.at3(b, j, 1);
        }

    nn::Tensor dcat = nn::mixconv_backward(net.mix, tape.cat, dy,
                                           grads ? &grads->mix : nullptr);

    nn::Tensor dz({B, 2, dm});
    for (int b = 0; b < B; ++b)
        for (int j = 0; j < dm; ++j) {
            double g0 = dcat.at3(b, 0, j);
            double g1 = dcat.at3(b, 1, j);
            double a0 = dcat.at3(b, 2, j);
            double a1 = dcat.at3(b, 3, j);
            dz.at3(b, 0, j) = g0 + (tape.z.at3(b, 0, j) >= 0.0 ? a0 : net.slope * a0);
            dz.at3(b, 1, j) = g1 + (tape.z.at3(b, 1, j) >= 0.0 ? a1 : net.slope * a1);
        }

    nn::Tensor dx({B, 2, fs});
    if (net.variant == 1) {
        nn::Tensor dzb({B, 2 * dm}, dz.data);
        nn::Tensor dz_pre = nn::bn_backward(net.bn, tape.bn, dzb,
                                            grads ? &grads->bn : nullptr);
        nn::Tensor dx2 = nn::affine_backward(net.lin, tape.x2, dz_pre,
                                             grads ? &grads->lin : nullptr);
        dx.data = dx2.data;
    } else {
        nn::Tensor dzr({B, dm}), dzi({B, dm});
        for (int b = 0; b < B; ++b)
            for (int j = 0; j < dm; ++j) {
                dzr.at2(b, j) = dz.at3(b, 0, j);
                dzi.at2(b, j) = dz.at3(b, 1, j);
            }
        nn::Tensor dzr_pre = nn::bn_backward(net.bn_r, tape.bn_r, dzr,
                                             grads ? &grads->bn_r : nullptr);
        nn::Tensor dzi_pre = nn::bn_backward(net.bn_i, tape.bn_i, dzi,
                                             grads ? &grads->bn_i : nullptr);
        nn::Tensor dxr = nn::affine_backward(net.lin_r, tape.xr, dzr_pre,
                                             grads ? &grads->lin_r : nullptr);
        nn::Tensor dxi = nn::affine_backward(net.lin_i, tape.xi, dzi_pre,
                                             grads ? &grads->lin_i : nullptr);
        for (int b = 0; b < B; ++b)
            for (int c = 0; c < fs; ++c) {
                dx.at3(b, 0, c) = dxr.at2(b, c);
                dx.at3(b, 1, c) = dxi.at2(b, c);
            }
    }
    return dx;
}

std::vector<std::pair<std::string, nn::Tensor*>> demodnet_params(DemodNet& net) {
    std::vector<std::pair<std::string, nn::Tensor*>> p;
    if (net.variant == 1) {
        p = {{"lin.W", &net.lin.W},
             {"lin.b", &net.lin.b},
             {"bn.gamma", &net.bn.gamma},
             {"bn.beta", &net.bn.beta}};
    } else {
        p = {{"lin_r.W", &net.lin_r.W}, {"lin_r.b", &net.lin_r.b},
             {"lin_i.W", &net.lin_i.W}, {"lin_i.b", &net.lin_i.b},
             {"bn_r.gamma", &net.bn_r.gamma}, {"bn_r.beta", &net.bn_r.beta},
             {"bn_i.gamma", &net.bn_i.gamma}, {"bn_i.beta", &net.bn_i.beta}};
    }
    p.push_back({"mix.M", &net.mix.M});
    p.push_back({"mix.b", &net.mix.b});
    return p;
}

std::vector<uint8_t> hard_bits(const nn::Tensor& scores) {
    if (scores.ndim() != 3 || scores.dim(2) != 2)
        throw std::invalid_argument("hard_bits: scores shape " + scores.shape_str());
    std::vector<uint8_t> bits((size_t)scores.dim(0) * scores.dim(1));
    size_t o = 0;
    for (int b = 0; b < scores.dim(0); ++b)
        for (int j = 0; j < scores.dim(1); ++j)
            bits[o++] = scores.at3(b, j, 1) > scores.at3(b, j, 0) ? 1 : 0;
    return bits;
}

} // namespace models
