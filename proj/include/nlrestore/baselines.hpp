#pragma once

#include "nlrestore/image.hpp"

namespace nlrestore {

struct BaselineConfig {
  int smfWindow = 3;
  int cwmfCenterWeight = 3;  // odd
  int tsmfThreshold = 20;
  int amfMaxWindow = 7;  // odd
};

// Standard median filter: every pixel replaced by the median of its
// replicated window. window must be 3 or 5.
Image smf(const Image& img, int window);

// Center-weighted median over the 3x3 window: the center contributes
// centerWeight copies to the multiset. centerWeight == 1 reduces to smf(3).
Image cwmf(const Image& img, int centerWeight);

// Tri-state median: with m = smf(3) and c = cwmf(centerWeight) outputs,
// keep x when |x - m| <= threshold, else c when |x - c| <= threshold, else m.
Image tsmf(const Image& img, int threshold, int centerWeight = 3);

// Classical adaptive-window median: grow from 3x3 while the window median is
// an extreme of the window; keep the center when it is not an extreme itself.
Image adaptiveMedian(const Image& img, int maxWindow);

}  // namespace nlrestore
