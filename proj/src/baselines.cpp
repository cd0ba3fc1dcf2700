#include "nlrestore/baselines.hpp"

#include "nlrestore/restore.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace nlrestore {

namespace {

// Replicated gather for arbitrary odd sizes (the adaptive filter outgrows
// the 5x5 Window type).
void gatherWindow(const Image& img, int x, int y, int size, std::vector<Sample>& out) {
  const int w = static_cast<int>(img.cols());
  const int h = static_cast<int>(img.rows());
  const int half = size / 2;
  out.clear();
  for (int dy = -half; dy <= half; ++dy) {
    const int yy = std::clamp(y + dy, 0, h - 1);
    for (int dx = -half; dx <= half; ++dx) {
      const int xx = std::clamp(x + dx, 0, w - 1);
      out.push_back(img(yy, xx));
    }
  }
}

}  // namespace

Image smf(const Image& img, int window) {
  if (window != 3 && window != 5) {
    throw std::invalid_argument("smf window must be 3 or 5");
  }
  Image out(img.rows(), img.cols());
  for (int y = 0; y < img.rows(); ++y) {
    for (int x = 0; x < img.cols(); ++x) {
      out(y, x) = exactMedian(extractWindow(img, x, y, window).samples());
    }
  }
  return out;
}

Image cwmf(const Image& img, int centerWeight) {
  if (centerWeight < 1 || centerWeight % 2 == 0) {
    throw std::invalid_argument("cwmf center weight must be odd and positive");
  }
  Image out(img.rows(), img.cols());
  std::vector<Sample> multiset;
  multiset.reserve(static_cast<std::size_t>(8 + centerWeight));
  for (int y = 0; y < img.rows(); ++y) {
    for (int x = 0; x < img.cols(); ++x) {
      const Window win = extractWindow(img, x, y, 3);
      multiset.assign(win.samples().begin(), win.samples().end());
      multiset.insert(multiset.end(), static_cast<std::size_t>(centerWeight - 1),
                      img(y, x));
      out(y, x) = exactMedian(multiset);
    }
  }
  return out;
}

Image tsmf(const Image& img, int threshold, int centerWeight) {
  if (threshold < 0) throw std::invalid_argument("tsmf threshold must be >= 0");
  const Image m = smf(img, 3);
  const Image c = cwmf(img, centerWeight);
  Image out(img.rows(), img.cols());
  for (int y = 0; y < img.rows(); ++y) {
    for (int x = 0; x < img.cols(); ++x) {
      const int xv = img(y, x);
      const int d1 = std::abs(xv - static_cast<int>(m(y, x)));
      const int d2 = std::abs(xv - static_cast<int>(c(y, x)));
      out(y, x) = d1 <= threshold ? img(y, x) : (d2 <= threshold ? c(y, x) : m(y, x));
    }
  }
  return out;
}

Image adaptiveMedian(const Image& img, int maxWindow) {
  if (maxWindow < 3 || maxWindow % 2 == 0) {
    throw std::invalid_argument("adaptive median max window must be odd and >= 3");
  }
  Image out(img.rows(), img.cols());
  std::vector<Sample> win;
  win.reserve(static_cast<std::size_t>(maxWindow) * static_cast<std::size_t>(maxWindow));
  for (int y = 0; y < img.rows(); ++y) {
    for (int x = 0; x < img.cols(); ++x) {
      const Sample center = img(y, x);
      Sample result = center;
      for (int s = 3; s <= maxWindow; s += 2) {
        gatherWindow(img, x, y, s, win);
        const auto [mnIt, mxIt] = std::minmax_element(win.begin(), win.end());
        const Sample mn = *mnIt;
        const Sample mx = *mxIt;
        const Sample med = exactMedian(win);
        if (mn < med && med < mx) {
          result = (mn < center && center < mx) ? center : med;
          break;
        }
        result = med;  // at maxWindow the median stands
      }
      out(y, x) = result;
    }
  }
  return out;
}

}  // namespace nlrestore
