#pragma once

#include "nlrestore/image.hpp"
#include "nlrestore/rng.hpp"

namespace nlrestore::testing {

// Uniform random samples in [lo, hi].
Image randomImage(int width, int height, SplitMix64& rng, int lo = 0, int hi = 255);

// Deterministic natural-looking scene: low-frequency shading, a few sharp
// region boundaries, and fine texture of the given amplitude. Values stay in
// [10, 245] so the scene carries no legitimate extremal pixels.
Image naturalScene(int width, int height, std::uint64_t seed, double textureAmplitude);

// Benchmark stand-ins for the classic portrait/town test photographs,
// textured so a 3x3 median at 20% impulse noise lands near the published
// 31.4 dB / 29.6 dB marks.
Image portraitScene(int width = 512, int height = 512);
Image townScene(int width = 512, int height = 512);

// Non-periodic smooth random field: bilinear interpolation of coarse random
// lattices (two octaves). Its autocorrelation decays monotonically, which
// gives block matching a wide, single-minimum SAD basin.
Image smoothLatticeScene(int width, int height, std::uint64_t seed);

// Multiplicative illumination/reflectance product: a vertical illumination
// ramp (constant within each row) times a fine checkerboard.
Image illuminationCheckerboard(int width, int height);

// Variance of per-row means, normalized by the squared global mean, so the
// measure is invariant to overall rescaling.
double rowMeanVariance(const Image& img);

// Mean absolute horizontal neighbor difference, normalized by the global
// mean; tracks checkerboard contrast independent of overall brightness.
double horizontalContrast(const Image& img);

}  // namespace nlrestore::testing
