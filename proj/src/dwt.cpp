#include "ringforge/dwt.hpp"

#include <cmath>

#include "ringforge/errors.hpp"

namespace ringforge::dwt {
namespace {

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

HaarBands haar_forward(const Mat& in) {
    if (in.rows % 2 != 0 || in.cols % 2 != 0 || in.rows < 2 || in.cols < 2)
        throw ValidationError("haar_forward: dimensions must be even and >= 2");
    const int hr = in.rows / 2;
    const int hc = in.cols / 2;

    // Pass 1: pairs along each row -> [L | H] halves.
    Mat low(in.rows, hc), high(in.rows, hc);
    for (int r = 0; r < in.rows; ++r) {
        for (int c = 0; c < hc; ++c) {
            const double a = in.at(r, 2 * c);
            const double b = in.at(r, 2 * c + 1);
            low.at(r, c) = (a + b) * inv_sqrt2;
            high.at(r, c) = (a - b) * inv_sqrt2;
        }
    }

    // Pass 2: pairs down each column.
    HaarBands out;
    out.ll = Mat(hr, hc);
    out.dv = Mat(hr, hc);
    out.dh = Mat(hr, hc);
    out.dd = Mat(hr, hc);
    for (int r = 0; r < hr; ++r) {
        for (int c = 0; c < hc; ++c) {
            const double la = low.at(2 * r, c), lb = low.at(2 * r + 1, c);
            const double ha = high.at(2 * r, c), hb = high.at(2 * r + 1, c);
            out.ll.at(r, c) = (la + lb) * inv_sqrt2;
            out.dh.at(r, c) = (la - lb) * inv_sqrt2;
            out.dv.at(r, c) = (ha + hb) * inv_sqrt2;
            out.dd.at(r, c) = (ha - hb) * inv_sqrt2;
        }
    }
    return out;
}

Mat haar_inverse(const HaarBands& bands) {
    const int hr = bands.ll.rows;
    const int hc = bands.ll.cols;
    if (bands.dv.rows != hr || bands.dh.rows != hr || bands.dd.rows != hr ||
        bands.dv.cols != hc || bands.dh.cols != hc || bands.dd.cols != hc)
        throw ValidationError("haar_inverse: band shapes differ");

    Mat low(2 * hr, hc), high(2 * hr, hc);
    for (int r = 0; r < hr; ++r) {
        for (int c = 0; c < hc; ++c) {
            low.at(2 * r, c) = (bands.ll.at(r, c) + bands.dh.at(r, c)) * inv_sqrt2;
            low.at(2 * r + 1, c) = (bands.ll.at(r, c) - bands.dh.at(r, c)) * inv_sqrt2;
            high.at(2 * r, c) = (bands.dv.at(r, c) + bands.dd.at(r, c)) * inv_sqrt2;
            high.at(2 * r + 1, c) = (bands.dv.at(r, c) - bands.dd.at(r, c)) * inv_sqrt2;
        }
    }

    Mat out(2 * hr, 2 * hc);
    for (int r = 0; r < out.rows; ++r) {
        for (int c = 0; c < hc; ++c) {
            out.at(r, 2 * c) = (low.at(r, c) + high.at(r, c)) * inv_sqrt2;
            out.at(r, 2 * c + 1) = (low.at(r, c) - high.at(r, c)) * inv_sqrt2;
        }
    }
    return out;
}

} // namespace ringforge::dwt
