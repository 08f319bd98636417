#include "ofdmnet/frame.hpp"

#include <algorithm>
#include <cmath>

namespace ofdm {

void FrameConfig::validate() const {
    if (n_fft < 2) throw std::invalid_argument("FrameConfig: n_fft < 2");
    if (cp_len < 0 || cp_len > n_fft)
        throw std::invalid_argument("FrameConfig: bad cp_len");
    if (guard_dc < 0 || guard_dc > 2)
        throw std::invalid_argument("FrameConfig: guard_dc must be 0..2");
    if (guard_side % 2 != 0)
        throw std::invalid_argument("FrameConfig: guard_side must be even");
    if (mod_order_bits != 1 && mod_order_bits != 2 && mod_order_bits != 4)
        throw std::invalid_argument("FrameConfig: mod_order_bits not in {1,2,4}");
    if (data_per_sym() <= 0)
        throw std::invalid_argument("FrameConfig: no data subcarriers left");
    if (std::abs(std::abs(pilot_value) - 1.0) > 1e-12)
        throw std::invalid_argument("FrameConfig: pilot must be unit magnitude");
}

std::vector<int> FrameConfig::null_indices() const {
    std::vector<int> nulls;
    if (guard_dc >= 1) nulls.push_back(0);
    if (guard_dc >= 2) nulls.push_back(n_fft / 2);
    int half = guard_side / 2;
    for (int i = 0; i < half; ++i) {
        nulls.push_back(n_fft / 2 - half + i); // below Nyquist
        nulls.push_back(n_fft / 2 + 1 + i);    // above Nyquist
    }
    std::sort(nulls.begin(), nulls.end());
    return nulls;
}

std::vector<int> FrameConfig::pilot_indices() const {
    auto nulls = null_indices();
    std::vector<int> used;
    used.reserve(n_fft - (int)nulls.size());
    for (int k = 0; k < n_fft; ++k)
        if (!std::binary_search(nulls.begin(), nulls.end(), k)) used.push_back(k);

    // Evenly spaced over the used bins.
    std::vector<int> pilots;
    int u = (int)used.size();
    for (int i = 0; i < pilots_per_sym; ++i) {
        int pos = (int)std::lround((i + 0.5) * u / pilots_per_sym);
        pos = std::min(pos, u - 1);
        pilots.push_back(used[pos]);
    }
    std::sort(pilots.begin(), pilots.end());
    pilots.erase(std::unique(pilots.begin(), pilots.end()), pilots.end());
    if ((int)pilots.size() != pilots_per_sym)
        throw std::invalid_argument("FrameConfig: pilot placement collision");
    return pilots;
}

std::vector<int> FrameConfig::data_indices() const {
    auto nulls = null_indices();
    auto pilots = pilot_indices();
    std::vector<int> data;
    data.reserve(data_per_sym());
    for (int k = 0; k < n_fft; ++k) {
        if (std::binary_search(nulls.begin(), nulls.end(), k)) continue;
        if (std::binary_search(pilots.begin(), pilots.end(), k)) continue;
        data.push_back(k);
    }
    return data;
}

FrameConfig FrameConfig::table_default(int mod_bits) {
    FrameConfig cfg;
    cfg.mod_order_bits = mod_bits;
    cfg.validate();
    return cfg;
}

FreqGrid build_freq_frame(const CVec& data, const FrameConfig& cfg) {
    if ((int)data.size() != cfg.data_per_frame())
        throw std::invalid_argument("build_freq_frame: data length != F*data_per_sym");
    auto pilots = cfg.pilot_indices();
    auto dbins = cfg.data_indices();

    FreqGrid grid(cfg.syms_per_frame, CVec(cfg.n_fft, cplx(0.0, 0.0)));
    size_t pos = 0;
    for (int s = 0; s < cfg.syms_per_frame; ++s) {
        for (int k : pilots) grid[s][k] = cfg.pilot_value;
        for (int k : dbins) grid[s][k] = data[pos++];
    }
    return grid;
}

CVec extract_freq_frame(const FreqGrid& grid, const FrameConfig& cfg) {
    if ((int)grid.size() != cfg.syms_per_frame)
        throw std::invalid_argument("extract_freq_frame: wrong symbol count");
    auto dbins = cfg.data_indices();
    CVec data;
    data.reserve(cfg.data_per_frame());
    for (const auto& row : grid) {
        if ((int)row.size() != cfg.n_fft)
            throw std::invalid_argument("extract_freq_frame: wrong row length");
        for (int k : dbins) data.push_back(row[k]);
    }
    return data;
}

} // namespace ofdm
