#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <span>

namespace nlrestore {

using Sample = std::uint8_t;

// 8-bit grayscale raster, indexed (row, col) = (y, x).
using Image = Eigen::Array<Sample, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Per-pixel corruption map, 1 = corrupted.
using Mask = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Real- and complex-valued grids for frequency-domain work.
using RealGrid = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Spectrum =
    Eigen::Array<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Square neighborhood read around a center pixel, row-major, size 3 or 5.
struct Window {
  int size = 0;
  std::array<Sample, 25> values{};

  int count() const { return size * size; }
  std::span<const Sample> samples() const {
    return {values.data(), static_cast<std::size_t>(count())};
  }
  Sample center() const { return values[static_cast<std::size_t>(count() / 2)]; }
  Sample operator()(int row, int col) const {
    return values[static_cast<std::size_t>(row * size + col)];
  }
};

inline bool sameSize(const Image& a, const Image& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

// Neighborhood centered at column x, row y; out-of-bounds positions take the
// nearest valid pixel (edge replication). size must be 3 or 5 and the center
// must lie inside the image.
Window extractWindow(const Image& img, int x, int y, int size);

}  // namespace nlrestore
