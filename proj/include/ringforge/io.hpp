#ifndef RINGFORGE_IO_HPP
#define RINGFORGE_IO_HPP

#include <filesystem>

#include "ringforge/image.hpp"
#include "ringforge/tensor.hpp"

namespace ringforge {

// Binary PGM (P5, maxval 255). Pixel byte = round(v * 255), halves rounded
// away from zero, so golden files are identical across platforms.
void save_pgm(const Image& img, const std::filesystem::path& path);
Image load_pgm(const std::filesystem::path& path);

// RFT1 tensor container: "RFT1" magic, one rank byte, 8-byte little-endian
// extents, then 4-byte little-endian IEEE-754 values. Lossless for
// float-representable values including signed zeros.
void save_tensor(const Tensor& t, const std::filesystem::path& path);
Tensor load_tensor(const std::filesystem::path& path);

} // namespace ringforge

#endif
