#include "mtae/image.hpp"

#include <cmath>
#include <stdexcept>

namespace mtae {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Corner-aligned source coordinate for output index i of n samples.
double src_coord(std::size_t i, std::size_t n_out, std::size_t n_in) {
    if (n_out == 1) return 0.5 * static_cast<double>(n_in - 1);
    return static_cast<double>(i) * static_cast<double>(n_in - 1) /
           static_cast<double>(n_out - 1);
}

double sample_bilinear_zero(const Image& img, double x, double y) {
    const double fx = std::floor(x), fy = std::floor(y);
    const long x0 = static_cast<long>(fx), y0 = static_cast<long>(fy);
    const double ux = x - fx, uy = y - fy;
    const long w = static_cast<long>(img.width), h = static_cast<long>(img.height);
    auto px = [&](long xx, long yy) -> double {
        if (xx < 0 || yy < 0 || xx >= w || yy >= h) return 0.0;
        return img.pixels[static_cast<std::size_t>(yy) * img.width + static_cast<std::size_t>(xx)];
    };
    return (1.0 - uy) * ((1.0 - ux) * px(x0, y0) + ux * px(x0 + 1, y0)) +
           uy * ((1.0 - ux) * px(x0, y0 + 1) + ux * px(x0 + 1, y0 + 1));
}

}  // namespace

Image resize_bilinear(const Image& img, std::size_t w, std::size_t h) {
    if (w < 1 || h < 1) throw std::invalid_argument("resize_bilinear: dims must be >= 1");
    Image out(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        const double sy = src_coord(r, h, img.height);
        const std::size_t y0 = static_cast<std::size_t>(sy);
        const std::size_t y1 = std::min(y0 + 1, img.height - 1);
        const double uy = sy - static_cast<double>(y0);
        for (std::size_t c = 0; c < w; ++c) {
            const double sx = src_coord(c, w, img.width);
            const std::size_t x0 = static_cast<std::size_t>(sx);
            const std::size_t x1 = std::min(x0 + 1, img.width - 1);
            const double ux = sx - static_cast<double>(x0);
            out.at(r, c) = (1.0 - uy) * ((1.0 - ux) * img.at(y0, x0) + ux * img.at(y0, x1)) +
                           uy * ((1.0 - ux) * img.at(y1, x0) + ux * img.at(y1, x1));
        }
    }
    return out;
}

Image rotate_image(const Image& img, double degrees) {
    if (img.width != img.height) throw std::invalid_argument("rotate_image: square image required");
    const double rad = degrees * kPi / 180.0;
    const double ca = std::cos(rad), sa = std::sin(rad);
    const double cx = 0.5 * static_cast<double>(img.width - 1);
    const double cy = 0.5 * static_cast<double>(img.height - 1);

    Image out(img.width, img.height);
    for (std::size_t r = 0; r < img.height; ++r) {
        // y axis points up in the rotation frame, rows run downward.
        const double yd = cy - static_cast<double>(r);
        for (std::size_t c = 0; c < img.width; ++c) {
            const double xd = static_cast<double>(c) - cx;
            const double xs = ca * xd + sa * yd;
            const double ys = -sa * xd + ca * yd;
            out.at(r, c) = sample_bilinear_zero(img, cx + xs, cy - ys);
        }
    }
    return out;
}

Image dilate_image(const Image& img, double factor) {
    if (!(factor > 0.0 && factor <= 1.0))
        throw std::invalid_argument("dilate_image: factor outside (0,1]");
    if (factor == 1.0) return img;
    const std::size_t w = static_cast<std::size_t>(
        std::lround(factor * static_cast<double>(img.width)));
    const std::size_t h = static_cast<std::size_t>(
        std::lround(factor * static_cast<double>(img.height)));
    Image small = resize_bilinear(img, std::max<std::size_t>(w, 1), std::max<std::size_t>(h, 1));

    Image out(img.width, img.height, 0.0);
    const std::size_t row0 = (img.height - small.height) / 2;
    const std::size_t col0 = (img.width - small.width) / 2;
    for (std::size_t r = 0; r < small.height; ++r)
        for (std::size_t c = 0; c < small.width; ++c)
            out.at(row0 + r, col0 + c) = small.at(r, c);
    return out;
}

}  // namespace mtae
