#ifndef RINGFORGE_DWT_HPP
#define RINGFORGE_DWT_HPP

#include <vector>

namespace ringforge::dwt {

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

// One level of the orthonormal 2-D Haar transform (rows and cols must be
// even). Quadrants, in the usual stripe-removal naming:
//   ll - lowpass both axes
//   dv - highpass across columns, lowpass down rows: vertical structures
//        (the band where a vertical stripe lives)
//   dh - lowpass across columns, highpass down rows: horizontal structures
//   dd - highpass both axes
struct HaarBands {
    Mat ll, dv, dh, dd;
};

HaarBands haar_forward(const Mat& in);
Mat haar_inverse(const HaarBands& bands);

} // namespace ringforge::dwt

#endif
