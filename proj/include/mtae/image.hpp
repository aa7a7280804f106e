#pragma once

#include <cstddef>
#include <vector>

namespace mtae {

// Grayscale raster, pixels in [0,1], row-major.
struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels;

    Image() = default;
    Image(std::size_t w, std::size_t h, double fill = 0.0)
        : width(w), height(h), pixels(w * h, fill) {}

    double& at(std::size_t row, std::size_t col) { return pixels[row * width + col]; }
    double at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

// Bilinear resize on a corner-aligned sample grid: output corners sample
// input corners exactly; a singleton axis samples the input axis centre.
Image resize_bilinear(const Image& img, std::size_t w, std::size_t h);

// Rotate a square image counterclockwise by `degrees` about its centre
// ((w-1)/2, (h-1)/2) using inverse mapping with bilinear interpolation;
// source samples falling outside the input contribute 0.
Image rotate_image(const Image& img, double degrees);

// Shrink the content by `factor` in (0,1] (bilinear, to round(factor*dim))
// and zero-pad it back, centred, to the original dimensions.
Image dilate_image(const Image& img, double factor);

}  // namespace mtae
