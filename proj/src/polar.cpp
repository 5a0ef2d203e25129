#include "ringforge/polar.hpp"

#include <cmath>
#include <numbers>

namespace ringforge::polar {
namespace {

double bilinear(const Image& img, double row, double col) {
    const int r0 = std::clamp(static_cast<int>(std::floor(row)), 0, img.height - 1);
    const int c0 = std::clamp(static_cast<int>(std::floor(col)), 0, img.width - 1);
    const int r1 = std::min(r0 + 1, img.height - 1);
    const int c1 = std::min(c0 + 1, img.width - 1);
    const double fr = std::clamp(row - r0, 0.0, 1.0);
    const double fc = std::clamp(col - c0, 0.0, 1.0);
    const double top = (1.0 - fc) * img.at(r0, c0) + fc * img.at(r0, c1);
    const double bot = (1.0 - fc) * img.at(r1, c0) + fc * img.at(r1, c1);
    return (1.0 - fr) * top + fr * bot;
}

} // namespace

PolarImage cart_to_polar(const Image& img, int n_theta, int n_r) {
    require_single_channel(img, "cart_to_polar");
    if (n_theta == 0) n_theta = default_n_theta(img);
    if (n_r == 0) n_r = default_n_r(img);
    if (n_theta < 4 || n_r < 2)
        throw ValidationError("cart_to_polar: need n_theta >= 4 and n_r >= 2");
    if (img.height < 2 || img.width < 2)
        throw ValidationError("cart_to_polar: image too small");

    PolarImage p;
    p.n_theta = n_theta;
    p.n_r = n_r;
    p.center_row = (img.height - 1) / 2.0;
    p.center_col = (img.width - 1) / 2.0;
    p.r_max = (std::min(img.height, img.width) - 1) / 2.0;
    p.data.resize(static_cast<std::size_t>(n_theta) * n_r);

    for (int i = 0; i < n_theta; ++i) {
        const double theta = i * (2.0 * std::numbers::pi / n_theta);
        const double sin_t = std::sin(theta);
        const double cos_t = std::cos(theta);
        for (int j = 0; j < n_r; ++j) {
            const double r = j * p.r_max / (n_r - 1);
            const double row = p.center_row - r * sin_t;
            const double col = p.center_col + r * cos_t;
            p.at(i, j) = std::clamp(bilinear(img, row, col), 0.0, 1.0);
        }
    }
    return p;
}

Image polar_to_cart(const PolarImage& p, int height, int width, const Image* fallback) {
    if (p.n_theta < 4 || p.n_r < 2) throw ValidationError("polar_to_cart: degenerate polar grid");
    if (height <= 0 || width <= 0) throw ValidationError("polar_to_cart: bad output size");
    if (fallback && (fallback->height != height || fallback->width != width))
        throw ValidationError("polar_to_cart: fallback dimensions differ");

    Image out(height, width);
    const double rad_to_row = p.n_theta / (2.0 * std::numbers::pi);
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            const double dy = p.center_row - row;
            const double dx = col - p.center_col;
            const double dist = std::hypot(dx, dy);
            if (dist > p.r_max) {
                if (!fallback)
                    throw ValidationError(
                        "polar_to_cart: pixel outside the disk and no fallback image given");
                out.at(row, col) = fallback->at(row, col);
                continue;
            }
            double angle = std::atan2(dy, dx);
            if (angle < 0.0) angle += 2.0 * std::numbers::pi;
            double ti = angle * rad_to_row;
            if (ti >= p.n_theta) ti -= p.n_theta;
            const double rj = dist * (p.n_r - 1) / p.r_max;

            const int i0 = static_cast<int>(std::floor(ti)) % p.n_theta;
            const int i1 = (i0 + 1) % p.n_theta;
            const double fi = ti - std::floor(ti);
            const int j0 = std::min(static_cast<int>(std::floor(rj)), p.n_r - 1);
            const int j1 = std::min(j0 + 1, p.n_r - 1);
            const double fj = std::clamp(rj - j0, 0.0, 1.0);

            const double a = (1.0 - fj) * p.at(i0, j0) + fj * p.at(i0, j1);
            const double b = (1.0 - fj) * p.at(i1, j0) + fj * p.at(i1, j1);
            out.at(row, col) = std::clamp((1.0 - fi) * a + fi * b, 0.0, 1.0);
        }
    }
    return out;
}

} // namespace ringforge::polar
