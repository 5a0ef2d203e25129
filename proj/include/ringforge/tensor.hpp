#ifndef RINGFORGE_TENSOR_HPP
#define RINGFORGE_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ringforge/errors.hpp"

namespace ringforge {

// Dense row-major tensor of up to 4 axes (batch, channel, height, width).
// Arithmetic happens in doubles; the RFT1 container stores 32-bit floats.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> s, double fill = 0.0) : shape(std::move(s)) {
        if (shape.empty() || shape.size() > 4)
            throw ValidationError("tensor: rank must be between 1 and 4");
        for (std::size_t e : shape)
            if (e == 0) throw ValidationError("tensor: zero extent");
        data.assign(numel_of(shape), fill);
    }

    static std::size_t numel_of(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (std::size_t e : s) n *= e;
        return n;
    }

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }

    // Rank-4 indexing (n, c, i, j).
    double& at4(std::size_t n, std::size_t c, std::size_t i, std::size_t j) {
        return data[((n * shape[1] + c) * shape[2] + i) * shape[3] + j];
    }
    double at4(std::size_t n, std::size_t c, std::size_t i, std::size_t j) const {
        return data[((n * shape[1] + c) * shape[2] + i) * shape[3] + j];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    Tensor zeros_like() const {
        Tensor t;
        t.shape = shape;
        t.data.assign(data.size(), 0.0);
        return t;
    }
};

inline std::string shape_string(const Tensor& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.shape[i]);
    }
    return s + "]";
}

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw ValidationError(std::string(op) + ": tensor shapes differ (" + shape_string(a) +
                              " vs " + shape_string(b) + ")");
}

} // namespace ringforge

#endif
