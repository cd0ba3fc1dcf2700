#pragma once

#include "nlrestore/image.hpp"

namespace nlrestore {

struct TransferSpec {
  enum class Kind { IdealLowpass, ButterworthLowpass, HomomorphicEmphasis };

  Kind kind = Kind::IdealLowpass;
  double cutoff = 1.0;      // D0, frequency radius in index units
  int order = 1;            // Butterworth
  double gammaLow = 0.5;    // homomorphic: gain at DC, must be in (0, 1)
  double gammaHigh = 1.5;   // homomorphic: high-frequency gain, must be > 1
  double sharpness = 1.0;   // homomorphic: transition steepness c
};

// Gain H(D) at Euclidean distance D from the spectrum center.
double transferGain(const TransferSpec& spec, double dist);

// Centered 2-D DFT: F(u,v) = sum_x sum_y f(x,y) (-1)^(x+y) e^(-2pi i(ux/W + vy/H)),
// DC at (rows/2, cols/2). Any dimensions.
Spectrum dft2(const RealGrid& grid);

// Exact inverse of dft2, including the centering convention.
RealGrid idft2(const Spectrum& spec);

// Pointwise multiply by the transfer gain.
Spectrum transfer(const Spectrum& spec, const TransferSpec& t);

// ln(1+f) -> dft2 -> transfer -> idft2 -> exp(.)-1, then a linear map of the
// result onto [0,255] with round-half-up.
Image homomorphicEnhance(const Image& img, const TransferSpec& t);

}  // namespace nlrestore
