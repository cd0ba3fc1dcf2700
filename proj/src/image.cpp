#include "nlrestore/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlrestore {

Window extractWindow(const Image& img, int x, int y, int size) {
  if (size != 3 && size != 5) {
    throw std::invalid_argument("window size must be 3 or 5");
  }
  if (x < 0 || y < 0 || x >= img.cols() || y >= img.rows()) {
    throw std::out_of_range("window center outside image");
  }
  const int w = static_cast<int>(img.cols());
  const int h = static_cast<int>(img.rows());
  const int half = size / 2;
  Window win;
  win.size = size;
  int k = 0;
  for (int dy = -half; dy <= half; ++dy) {
    const int yy = std::clamp(y + dy, 0, h - 1);
    for (int dx = -half; dx <= half; ++dx) {
      const int xx = std::clamp(x + dx, 0, w - 1);
      win.values[static_cast<std::size_t>(k++)] = img(yy, xx);
    }
  }
  return win;
}

}  // namespace nlrestore
