#include "ofdmnet/rng.hpp"

#include <cmath>

namespace rng {

std::pair<double, double> Stream::next_normal_pair() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

} // namespace rng
