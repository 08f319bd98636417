#pragma once
#include "ofdmnet/tensor.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace nn {

// Parameter bundle: a directory holding manifest.json plus one raw
// little-endian array file per tensor. Versioned; used for trained models,
// optimizer checkpoints and quantized graphs alike.
struct BundleEntry {
    std::string name;
    std::string dtype; // "f64" | "f32" | "i8" | "i16" | "i32"
    std::vector<int> shape;
    std::vector<unsigned char> raw;

    long numel() const;
};

struct Bundle {
    static constexpr int kFormatVersion = 1;

    nlohmann::json meta; // free-form metadata block
    std::vector<BundleEntry> entries;

    void put_f64(const std::string& name, const Tensor& t);
    void put_i8(const std::string& name, const std::vector<int8_t>& v,
                std::vector<int> shape);
    void put_i16(const std::string& name, const std::vector<int16_t>& v,
                 std::vector<int> shape);

    bool has(const std::string& name) const;
    const BundleEntry& entry(const std::string& name) const;
    Tensor get_f64(const std::string& name) const;
    std::vector<int8_t> get_i8(const std::string& name) const;
    std::vector<int16_t> get_i16(const std::string& name) const;
};

void save_bundle(const std::filesystem::path& dir, const Bundle& b);
Bundle load_bundle(const std::filesystem::path& dir);

} // namespace nn
