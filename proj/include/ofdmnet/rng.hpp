#pragma once
#include <cstdint>
#include <utility>

// Counter-based random numbers: every draw is a pure function of
// (key, counter), so independent workers can share a master seed and
// derive non-overlapping streams without coordination.
namespace rng {

// SplitMix64 finalizer.
inline uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t hash2(uint64_t key, uint64_t ctr) {
    return mix(key ^ mix(ctr));
}

class Stream {
public:
    explicit Stream(uint64_t seed) : key_(mix(seed)) {}

    // Child stream for an independent purpose (worker id, step, ...).
    Stream split(uint64_t tag) const { return Stream(raw(hash2(key_, tag))); }

    uint64_t next_u64() { return hash2(key_, ctr_++); }

    // Uniform in (0, 1]; never returns 0 so it is log-safe.
    double next_uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_uniform();
    }

    // Standard normal pair (Box-Muller).
    std::pair<double, double> next_normal_pair();

    double next_normal() {
        if (have_spare_) { have_spare_ = false; return spare_; }
        auto [a, b] = next_normal_pair();
        spare_ = b;
        have_spare_ = true;
        return a;
    }

    uint64_t key() const { return key_; }

private:
    struct raw {
        uint64_t k;
        explicit raw(uint64_t v) : k(v) {}
    };
    explicit Stream(raw r) : key_(r.k) {}

    uint64_t key_;
    uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace rng
