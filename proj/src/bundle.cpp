#include "ofdmnet/bundle.hpp"

#include <cstring>
#include <fstream>

namespace nn {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

size_t dtype_size(const std::string& dt) {
    if (dt == "f64") return 8;
    if (dt == "f32") return 4;
    if (dt == "i8") return 1;
    if (dt == "i16") return 2;
    if (dt == "i32") return 4;
    throw std::invalid_argument("bundle: unknown dtype " + dt);
}

void write_file(const fs::path& p, const void* data, size_t n) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("bundle: cannot write " + p.string());
    f.write(reinterpret_cast<const char*>(data), (std::streamsize)n);
    if (!f) throw std::runtime_error("bundle: short write " + p.string());
}

std::vector<unsigned char> read_file(const fs::path& p, size_t expect) {
    std::ifstream f(p, std::ios::binary | std::ios::ate);
    if (!f) throw std::runtime_error("bundle: cannot read " + p.string());
    size_t n = (size_t)f.tellg();
    if (n != expect)
        throw std::runtime_error("bundle: size mismatch for " + p.string());
    std::vector<unsigned char> buf(n);
    f.seekg(0);
    f.read(reinterpret_cast<char*>(buf.data()), (std::streamsize)n);
    return buf;
}

} // namespace

long BundleEntry::numel() const { return Tensor::numel_of(shape); }

void Bundle::put_f64(const std::string& name, const Tensor& t) {
    BundleEntry e;
    e.name = name;
    e.dtype = "f64";
    e.shape = t.shape;
    e.raw.resize(t.data.size() * 8);
    std::memcpy(e.raw.data(), t.data.data(), e.raw.size());
    entries.push_back(std::move(e));
}

void Bundle::put_i8(const std::string& name, const std::vector<int8_t>& v,
                    std::vector<int> shape) {
    BundleEntry e;
    e.name = name;
    e.dtype = "i8";
    e.shape = std::move(shape);
    if ((size_t)Tensor::numel_of(e.shape) != v.size())
        throw std::invalid_argument("bundle: i8 shape mismatch for " + name);
    e.raw.resize(v.size());
    std::memcpy(e.raw.data(), v.data(), v.size());
    entries.push_back(std::move(e));
}

void Bundle::put_i16(const std::string& name, const std::vector<int16_t>& v,
                     std::vector<int> shape) {
    BundleEntry e;
    e.name = name;
    e.dtype = "i16";
    e.shape = std::move(shape);
    if ((size_t)Tensor::numel_of(e.shape) != v.size())
        throw std::invalid_argument("bundle: i16 shape mismatch for " + name);
    e.raw.resize(v.size() * 2);
    std::memcpy(e.raw.data(), v.data(), e.raw.size());
    entries.push_back(std::move(e));
}

bool Bundle::has(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return true;
    return false;
}

const BundleEntry& Bundle::entry(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw std::runtime_error("bundle: missing tensor " + name);
}

Tensor Bundle::get_f64(const std::string& name) const {
    const BundleEntry& e = entry(name);
    if (e.dtype != "f64")
        throw std::runtime_error("bundle: " + name + " is not f64");
    Tensor t(e.shape);
    std::memcpy(t.data.data(), e.raw.data(), e.raw.size());
    return t;
}

std::vector<int8_t> Bundle::get_i8(const std::string& name) const {
    const BundleEntry& e = entry(name);
    if (e.dtype != "i8")
        throw std::runtime_error("bundle: " + name + " is not i8");
    std::vector<int8_t> v(e.raw.size());
    std::memcpy(v.data(), e.raw.data(), e.raw.size());
    return v;
}

std::vector<int16_t> Bundle::get_i16(const std::string& name) const {
    const BundleEntry& e = entry(name);
    if (e.dtype != "i16")
        throw std::runtime_error("bundle: " + name + " is not i16");
    std::vector<int16_t> v(e.raw.size() / 2);
    std::memcpy(v.data(), e.raw.data(), e.raw.size());
    return v;
}

void save_bundle(const fs::path& dir, const Bundle& b) {
    fs::create_directories(dir);
    json manifest;
    manifest["format_version"] = Bundle::kFormatVersion;
    manifest["meta"] = b.meta;
    json tensors = json::array();
    for (const auto& e : b.entries) {
        json t;
        t["name"] = e.name;
        t["dtype"] = e.dtype;
        t["shape"] = e.shape;
        t["file"] = e.name + ".bin";
        tensors.push_back(t);
        write_file(dir / (e.name + ".bin"), e.raw.data(), e.raw.size());
    }
    manifest["tensors"] = tensors;
    std::ofstream f(dir / "manifest.json");
    if (!f) throw std::runtime_error("bundle: cannot write manifest");
    f << manifest.dump(2) << "\n";
}

Bundle load_bundle(const fs::path& dir) {
    std::ifstream f(dir / "manifest.json");
    if (!f) throw std::runtime_error("bundle: no manifest in " + dir.string());
    json manifest = json::parse(f);
    if (manifest.at("format_version").get<int>() != Bundle::kFormatVersion)
        throw std::runtime_error("bundle: unsupported format version");
    Bundle b;
    b.meta = manifest.value("meta", json::object());
    for (const auto& t : manifest.at("tensors")) {
        BundleEntry e;
        e.name = t.at("name").get<std::string>();
        e.dtype = t.at("dtype").get<std::string>();
        e.shape = t.at("shape").get<std::vector<int>>();
        size_t bytes = (size_t)e.numel() * dtype_size(e.dtype);
        e.raw = read_file(dir / t.at("file").get<std::string>(), bytes);
        b.entries.push_back(std::move(e));
    }
    return b;
}

} // namespace nn
