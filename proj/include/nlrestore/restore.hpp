#pragma once

#include "nlrestore/image.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nlrestore {

struct RestoreConfig {
  Sample lowThreshold = 0;    // value detected as a negative impulse
  Sample highThreshold = 255; // value detected as a positive impulse
  int case2Max = 4;           // corrupted-count bound for the 3x3 median case
  int case3Max = 12;          // corrupted-count bound for the 5x5 median case
  bool recursive = true;      // restored pixels feed later windows
};

enum class ReplacementSource : std::uint8_t {
  Median3,
  Median5,
  MeanUncorrupted,
  Fallback,  // west neighbor, or 128 at the left edge
};

struct PixelTrace {
  int x = 0;
  int y = 0;
  std::uint8_t caseId = 0;  // 2..4; clean pixels are case 1 and not recorded
  ReplacementSource source = ReplacementSource::Median3;
};

struct CaseTrace {
  std::int64_t caseCount[5] = {0, 0, 0, 0, 0};    // index 1..4
  std::int64_t sourceCount[4] = {0, 0, 0, 0};     // by ReplacementSource
  std::vector<PixelTrace> pixels;                 // one entry per corrupted pixel
};

struct RestoreResult {
  Image image;
  CaseTrace trace;
};

bool isCorrupted(Sample v, const RestoreConfig& cfg = {});

// Corrupted samples in the replicated 5x5 window centered at (x, y).
int countCorrupted(const Image& img, int x, int y, const RestoreConfig& cfg = {});

// Middle element of the sorted sequence; odd nonzero length required.
Sample exactMedian(std::span<const Sample> values);

// Rows ascending, then columns ascending, then the main anti-diagonal
// ascending (top-right to bottom-left); returns the center element.
// Equals exactMedian for 3x3 windows; may differ for 5x5.
Sample shearSortMedian(Window win);

// Mean of samples not detected as corrupted, rounded half-up.
// nullopt when every sample is corrupted.
std::optional<Sample> meanUncorrupted(const Window& win, const RestoreConfig& cfg = {});

// Decision-based adaptive median/mean restoration. Raster scan; only pixels
// detected as corrupted are replaced:
//   case 2 (n <= case2Max):             3x3 exact median
//   case 3 (case2Max < n <= case3Max):  5x5 exact median
//   case 4 (n > case3Max):              3x3 median, escalating to the mean of
//                                       uncorrupted pixels, then to the 5x5
//                                       window, when the median is itself an
//                                       extreme value
// A median that lands on an extreme falls through to the mean in every case.
RestoreResult ndbRestore(const Image& img, const RestoreConfig& cfg = {});

}  // namespace nlrestore
