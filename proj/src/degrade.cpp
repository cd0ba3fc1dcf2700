#include "nlrestore/degrade.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nlrestore {

namespace {

// Distinct row indices, rejection-sampled so the draw order is part of the
// seeded contract.
std::vector<int> pickDistinctRows(int height, int count, SplitMix64& rng) {
  std::vector<bool> used(static_cast<std::size_t>(height), false);
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(rows.size()) < count) {
    const int r = static_cast<int>(rng.nextBelow(static_cast<std::uint64_t>(height)));
    if (used[static_cast<std::size_t>(r)]) continue;
    used[static_cast<std::size_t>(r)] = true;
    rows.push_back(r);
  }
  return rows;
}

void paintRow(DegradeResult& res, int row, Sample value) {
  res.image.row(row).setConstant(value);
  res.mask.row(row).setConstant(1);
}

}  // namespace

Image applyDegradation(const Image& img, const Mask& mask, const Image& corruptValues) {
  if (img.rows() != mask.rows() || img.cols() != mask.cols() ||
      !sameSize(img, corruptValues)) {
    throw std::invalid_argument("applyDegradation: dimension mismatch");
  }
  return (mask != 0).select(corruptValues, img);
}

DegradeResult injectImpulse(const Image& img, double density, SplitMix64& rng) {
  if (density < 0.0 || density > 1.0) {
    throw std::invalid_argument("impulse density must be in [0,1]");
  }
  DegradeResult res{img, Mask::Zero(img.rows(), img.cols())};
  for (Eigen::Index y = 0; y < img.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.cols(); ++x) {
      if (rng.nextUnit() < density) {
        res.image(y, x) = rng.nextExtreme();
        res.mask(y, x) = 1;
      }
    }
  }
  return res;
}

DegradeResult injectLines(const Image& img, LineKind kind, int count, SplitMix64& rng) {
  if (count < 0 || count > img.rows()) {
    throw std::invalid_argument("line count must fit within image height");
  }
  DegradeResult res{img, Mask::Zero(img.rows(), img.cols())};
  const auto rows = pickDistinctRows(static_cast<int>(img.rows()), count, rng);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Sample value = kind == LineKind::Drop ? rng.nextExtreme()
                                                : (i % 2 == 0 ? Sample{0} : Sample{255});
    paintRow(res, rows[i], value);
  }
  return res;
}

DegradeResult injectBand(const Image& img, int startRow, int width, SplitMix64& rng) {
  if (width < 2) throw std::invalid_argument("band width must be >= 2");
  if (startRow < 0 || startRow + width > img.rows()) {
    throw std::invalid_argument("band exceeds image height");
  }
  DegradeResult res{img, Mask::Zero(img.rows(), img.cols())};
  const Sample value = rng.nextExtreme();
  for (int r = startRow; r < startRow + width; ++r) paintRow(res, r, value);
  return res;
}

DegradeResult injectBlotches(const Image& img, int count, int radiusMin, int radiusMax,
                             SplitMix64& rng) {
  if (count < 0) throw std::invalid_argument("blotch count must be >= 0");
  if (radiusMin < 1 || radiusMax < radiusMin) {
    throw std::invalid_argument("blotch radii must satisfy 1 <= min <= max");
  }
  const int w = static_cast<int>(img.cols());
  const int h = static_cast<int>(img.rows());
  DegradeResult res{img, Mask::Zero(img.rows(), img.cols())};
  const std::uint64_t span = static_cast<std::uint64_t>(radiusMax - radiusMin + 1);
  for (int i = 0; i < count; ++i) {
    const int cx = static_cast<int>(rng.nextBelow(static_cast<std::uint64_t>(w)));
    const int cy = static_cast<int>(rng.nextBelow(static_cast<std::uint64_t>(h)));
    const std::int64_t a = radiusMin + static_cast<int>(rng.nextBelow(span));
    const std::int64_t b = radiusMin + static_cast<int>(rng.nextBelow(span));
    const Sample value = rng.nextExtreme();
    for (std::int64_t dy = -b; dy <= b; ++dy) {
      const int yy = cy + static_cast<int>(dy);
      if (yy < 0 || yy >= h) continue;
      for (std::int64_t dx = -a; dx <= a; ++dx) {
        const int xx = cx + static_cast<int>(dx);
        if (xx < 0 || xx >= w) continue;
        // dx^2/a^2 + dy^2/b^2 <= 1, kept in integers
        if (dx * dx * b * b + dy * dy * a * a <= a * a * b * b) {
          res.image(yy, xx) = value;
          res.mask(yy, xx) = 1;
        }
      }
    }
  }
  return res;
}

Image injectGaussian(const Image& img, double sigma, SplitMix64& rng) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian sigma must be >= 0");
  if (sigma == 0.0) return img;
  Image out(img.rows(), img.cols());
  for (Eigen::Index y = 0; y < img.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.cols(); ++x) {
      double u1 = rng.nextUnit();
      if (u1 == 0.0) u1 = 0x1.0p-53;
      const double u2 = rng.nextUnit();
      const double n =
          sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      const long long v = std::llround(static_cast<double>(img(y, x)) + n);
      out(y, x) = static_cast<Sample>(std::clamp(v, 0LL, 255LL));
    }
  }
  return out;
}

DegradeResult degrade(const Image& img, const DegradationSpec& spec) {
  SplitMix64 rng(spec.seed);
  DegradeResult res{img, Mask::Zero(img.rows(), img.cols())};
  if (spec.gaussianSigma) {
    res.image = injectGaussian(res.image, *spec.gaussianSigma, rng);
  }
  auto absorb = [&res](DegradeResult&& step) {
    res.image = std::move(step.image);
    res.mask = (res.mask != 0 || step.mask != 0).cast<std::uint8_t>();
  };
  if (spec.impulseDensity > 0.0) absorb(injectImpulse(res.image, spec.impulseDensity, rng));
  if (spec.dropLines > 0) absorb(injectLines(res.image, LineKind::Drop, spec.dropLines, rng));
  if (spec.stripLines > 0) absorb(injectLines(res.image, LineKind::Strip, spec.stripLines, rng));
  if (spec.band) absorb(injectBand(res.image, spec.band->first, spec.band->second, rng));
  if (spec.blotches > 0) {
    absorb(injectBlotches(res.image, spec.blotches, spec.blotchRadiusMin,
                          spec.blotchRadiusMax, rng));
  }
  return res;
}

Image maskToImage(const Mask& mask) {
  return (mask != 0).select(Image::Constant(mask.rows(), mask.cols(), 255),
                            Image::Zero(mask.rows(), mask.cols()));
}

Mask maskFromImage(const Image& img) { return (img != 0).cast<std::uint8_t>(); }

}  // namespace nlrestore
