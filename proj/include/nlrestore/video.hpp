#pragma once

#include "nlrestore/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace nlrestore {

using FrameSequence = std::vector<Image>;

struct MotionVector {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const MotionVector&, const MotionVector&) = default;
};

struct MotionField {
  int blockSize = 16;
  int searchRange = 7;
  int blocksX = 0;
  int blocksY = 0;
  std::vector<MotionVector> vectors;       // row-major over blocks
  std::vector<std::int64_t> costs;         // best SAD per block
  std::vector<std::int32_t> evaluations;   // SAD evaluations spent per block

  const MotionVector& at(int bx, int by) const {
    return vectors[static_cast<std::size_t>(by * blocksX + bx)];
  }
};

// SAD between the (bw x bh) block of current at (x0, y0) and the block of
// reference displaced by (dx, dy); out-of-frame reads replicate the edge.
std::int64_t blockSad(const Image& current, const Image& reference, int x0, int y0, int bw,
                      int bh, int dx, int dy);

// Adaptive rood pattern search: the left neighbor's vector seeds a rood of
// arm length max(|px|,|py|), then a unit diamond walks to a local minimum.
// Ties break toward smaller |dx|+|dy|, then smaller dy, then smaller dx.
MotionField arpsEstimate(const Image& current, const Image& reference, int blockSize = 16,
                         int searchRange = 7);

// Per-interior-frame motion toward both temporal neighbors.
struct PairMotion {
  MotionField toPrevious;
  MotionField toNext;
};

// Three-frame temporal median; first and last frames pass through unchanged.
// motion must hold one entry per interior frame.
FrameSequence temporalMedianDenoise(const FrameSequence& seq,
                                    std::span<const PairMotion> motion);

// Convenience: identity compensation, or ARPS fields computed per pair.
FrameSequence temporalMedianDenoise(const FrameSequence& seq, bool motionCompensated,
                                    int blockSize = 16, int searchRange = 7);

// Directory convention: zero-padded numbered PGM files (frame_0001.pgm ...),
// lexicographic order.
FrameSequence loadFrameDirectory(const std::filesystem::path& dir);
void saveFrameDirectory(const std::filesystem::path& dir, const FrameSequence& seq);

// CSV export: header block_x,block_y,dx,dy then one row per block.
std::string motionFieldCsv(const MotionField& field);

}  // namespace nlrestore
