#ifndef RINGFORGE_POLAR_HPP
#define RINGFORGE_POLAR_HPP

#include "ringforge/image.hpp"

namespace ringforge::polar {

// Image resampled onto (angle, radius) axes about the frame center: row i
// holds angle i*360/n_theta degrees, column j holds radius j*r_max/(n_r-1).
// A ring of fixed radius becomes one vertical stripe.
struct PolarImage {
    int n_theta = 0;
    int n_r = 0;
    double r_max = 0.0;
    double center_row = 0.0;
    double center_col = 0.0;
    std::vector<double> data;

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n_r + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n_r + j]; }

    // View as a plain image (rows = angles, cols = radii), e.g. for PGM dumps.
    Image to_image() const {
        Image img(n_theta, n_r);
        img.data = data;
        return img;
    }
};

inline int default_n_theta(const Image& img) { return 4 * std::min(img.height, img.width); }
inline int default_n_r(const Image& img) { return std::min(img.height, img.width); }

// Bilinear resampling onto the polar grid. r_max is the inscribed-circle
// radius (min(h,w)-1)/2; corners are never sampled. Pass 0 to use the
// default sampling density (n_theta = 4*min(h,w), n_r = min(h,w)).
PolarImage cart_to_polar(const Image& img, int n_theta = 0, int n_r = 0);

// Bilinear resampling back to a cartesian frame. The angle axis wraps, the
// radius axis clamps. Pixels outside the inscribed disk copy from fallback,
// which is required whenever the disk does not cover the frame.
Image polar_to_cart(const PolarImage& p, int height, int width,
                    const Image* fallback = nullptr);

} // namespace ringforge::polar

#endif
