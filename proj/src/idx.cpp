#include "mtae/idx.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace mtae {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::uint32_t read_u32_be(std::istream& in, const std::string& path) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw std::runtime_error("truncated idx file: " + path);
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void write_u32_be(std::ostream& out, std::uint32_t v) {
    const unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                                static_cast<unsigned char>(v >> 16),
                                static_cast<unsigned char>(v >> 8),
                                static_cast<unsigned char>(v)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open idx file: " + path);
    return in;
}

}  // namespace

std::vector<Image> load_idx_images(const std::string& path) {
    std::ifstream in = open_input(path);
    if (read_u32_be(in, path) != kImageMagic)
        throw std::runtime_error("wrong magic for image file: " + path);
    const std::uint32_t count = read_u32_be(in, path);
    const std::uint32_t rows = read_u32_be(in, path);
    const std::uint32_t cols = read_u32_be(in, path);
    if (rows == 0 || cols == 0 ||
        std::uint64_t(count) * rows * cols > std::numeric_limits<std::uint32_t>::max())
        throw std::runtime_error("idx image dimensions overflow: " + path);

    std::vector<Image> images;
    images.reserve(count);
    std::vector<unsigned char> buf(std::size_t(rows) * cols);
    for (std::uint32_t i = 0; i < count; ++i) {
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
            throw std::runtime_error("truncated idx image payload: " + path);
        Image img(cols, rows);
        for (std::size_t k = 0; k < buf.size(); ++k)
            img.pixels[k] = static_cast<double>(buf[k]) / 255.0;
        images.push_back(std::move(img));
    }
    return images;
}

std::vector<int> load_idx_labels(const std::string& path) {
    std::ifstream in = open_input(path);
    if (read_u32_be(in, path) != kLabelMagic)
        throw std::runtime_error("wrong magic for label file: " + path);
    const std::uint32_t count = read_u32_be(in, path);
    std::vector<unsigned char> buf(count);
    if (count > 0 &&
        !in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
        throw std::runtime_error("truncated idx label payload: " + path);
    return std::vector<int>(buf.begin(), buf.end());
}

void save_idx_images(const std::string& path, const std::vector<Image>& images) {
    if (images.empty()) throw std::invalid_argument("save_idx_images: no images");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write idx file: " + path);
    const std::size_t rows = images.front().height, cols = images.front().width;
    write_u32_be(out, kImageMagic);
    write_u32_be(out, static_cast<std::uint32_t>(images.size()));
    write_u32_be(out, static_cast<std::uint32_t>(rows));
    write_u32_be(out, static_cast<std::uint32_t>(cols));
    std::vector<unsigned char> buf(rows * cols);
    for (const Image& img : images) {
        if (img.height != rows || img.width != cols)
            throw std::invalid_argument("save_idx_images: mixed image dimensions");
        for (std::size_t k = 0; k < buf.size(); ++k)
            buf[k] = static_cast<unsigned char>(std::lround(img.pixels[k] * 255.0));
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    }
}

void save_idx_labels(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write idx file: " + path);
    write_u32_be(out, kLabelMagic);
    write_u32_be(out, static_cast<std::uint32_t>(labels.size()));
    for (int l : labels) {
        const unsigned char b = static_cast<unsigned char>(l);
        out.write(reinterpret_cast<const char*>(&b), 1);
    }
}

}  // namespace mtae
