#pragma once

#include <string>
#include <vector>

#include "mtae/image.hpp"

namespace mtae {

// IDX container format: big-endian magic + dims, unsigned byte payload.
// Images use magic 0x00000803 with dims [count, rows, cols]; labels use
// magic 0x00000801 with dims [count]. Pixels are scaled by 1/255 on load
// and by 255 (rounded) on save, so save(load(f)) reproduces f byte for byte.
std::vector<Image> load_idx_images(const std::string& path);
std::vector<int> load_idx_labels(const std::string& path);

void save_idx_images(const std::string& path, const std::vector<Image>& images);
void save_idx_labels(const std::string& path, const std::vector<int>& labels);

}  // namespace mtae
