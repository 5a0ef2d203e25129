#ifndef RINGFORGE_IMAGE_HPP
#define RINGFORGE_IMAGE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ringforge/errors.hpp"

namespace ringforge {

// 2-D grid of intensities in [0,1], row-major and channel-interleaved.
// The universal currency between the generator, the filters, the network
// and the metrics. Values are stored as doubles; files quantize to 8 bits.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 1;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, double fill = 0.0, int c = 1)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, fill) {
        if (h <= 0 || w <= 0 || c <= 0)
            throw ValidationError("image: non-positive dimensions");
    }

    double& at(int row, int col, int ch = 0) {
        return data[(static_cast<std::size_t>(row) * width + col) * channels + ch];
    }
    double at(int row, int col, int ch = 0) const {
        return data[(static_cast<std::size_t>(row) * width + col) * channels + ch];
    }

    std::size_t size() const { return data.size(); }

    bool same_shape(const Image& other) const {
        return height == other.height && width == other.width && channels == other.channels;
    }

    void clamp01() {
        for (double& v : data) v = std::clamp(v, 0.0, 1.0);
    }
};

inline void require_same_shape(const Image& a, const Image& b, const char* op) {
    if (!a.same_shape(b))
        throw ValidationError(std::string(op) + ": image dimensions differ");
}

inline void require_single_channel(const Image& img, const char* op) {
    if (img.channels != 1)
        throw ValidationError(std::string(op) + ": expected a single-channel image");
}

} // namespace ringforge

#endif
