#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nn {

// Dense row-major real tensor.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), 0.0);
    }
    Tensor(std::vector<int> s, std::vector<double> d)
        : shape(std::move(s)), data(std::move(d)) {
        if ((size_t)numel_of(shape) != data.size())
            throw std::invalid_argument("Tensor: shape/data mismatch");
    }

    static long numel_of(const std::vector<int>& s) {
        long n = 1;
        for (int d : s) {
            if (d < 0) throw std::invalid_argument("Tensor: negative dim");
            n *= d;
        }
        return n;
    }

    long numel() const { return (long)data.size(); }
    int dim(int i) const { return shape.at(i); }
    int ndim() const { return (int)shape.size(); }

    double* ptr() { return data.data(); }
    const double* ptr() const { return data.data(); }

    double& at2(int r, int c) { return data[(size_t)r * shape[1] + c]; }
    double at2(int r, int c) const { return data[(size_t)r * shape[1] + c]; }

    double& at3(int a, int b, int c) {
        return data[((size_t)a * shape[1] + b) * shape[2] + c];
    }
    double at3(int a, int b, int c) const {
        return data[((size_t)a * shape[1] + b) * shape[2] + c];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    std::string shape_str() const {
        std::string s = "[";
        for (size_t i = 0; i < shape.size(); ++i)
            s += (i ? "," : "") + std::to_string(shape[i]);
        return s + "]";
    }
};

// Spec-facing alias: the library's only tensor is dense and real.
using RealTensor = Tensor;

bool all_finite(const Tensor& t);
double max_abs_diff(const Tensor& a, const Tensor& b);

} // namespace nn
