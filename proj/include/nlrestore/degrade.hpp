#pragma once

#include "nlrestore/image.hpp"
#include "nlrestore/rng.hpp"

#include <optional>
#include <utility>

namespace nlrestore {

struct DegradeResult {
  Image image;
  Mask mask;  // 1 where the injector touched the pixel
};

enum class LineKind { Drop, Strip };

struct DegradationSpec {
  double impulseDensity = 0.0;
  int dropLines = 0;
  int stripLines = 0;
  std::optional<std::pair<int, int>> band;  // (start_row, width >= 2)
  int blotches = 0;
  int blotchRadiusMin = 2;
  int blotchRadiusMax = 5;
  std::optional<double> gaussianSigma;
  std::uint64_t seed = 0;
};

// out = img where mask == 0, corruptValues where mask == 1.
Image applyDegradation(const Image& img, const Mask& mask, const Image& corruptValues);

// Each pixel independently becomes 0 or 255 (equal odds) with probability density.
DegradeResult injectImpulse(const Image& img, double density, SplitMix64& rng);

// Drop: each selected row painted one random extreme. Strip: selected rows
// painted alternately 0 and 255 in selection order. Rows are distinct.
DegradeResult injectLines(const Image& img, LineKind kind, int count, SplitMix64& rng);

// width consecutive rows from startRow painted a single random extreme.
DegradeResult injectBand(const Image& img, int startRow, int width, SplitMix64& rng);

// count filled ellipses, random centers and axes in [radiusMin, radiusMax],
// each painted a single random extreme; clipped at borders.
DegradeResult injectBlotches(const Image& img, int count, int radiusMin, int radiusMax,
                             SplitMix64& rng);

// Additive zero-mean Gaussian noise, Box-Muller, rounded and clamped.
// Returns no mask and is excluded from mask-based metrics.
Image injectGaussian(const Image& img, double sigma, SplitMix64& rng);

// Full composition, fixed order: Gaussian -> impulse -> drop -> strip -> band
// -> blotches; masks OR-combined.
DegradeResult degrade(const Image& img, const DegradationSpec& spec);

// Mask <-> PGM convention: 255 = corrupted, 0 = clean.
Image maskToImage(const Mask& mask);
Mask maskFromImage(const Image& img);

}  // namespace nlrestore
