#pragma once

#include "nlrestore/image.hpp"

#include <optional>

namespace nlrestore {

// Undefined entries (empty mask, zero noise denominator) are nullopt and
// print as "na"; exact fits produce +infinity, printed as "inf".
struct MetricsReport {
  double mse = 0.0;
  double psnrDb = 0.0;
  std::optional<double> snrRestoredDb;
  std::optional<double> snrNoisyDb;
  std::optional<double> snriDb;
  std::optional<double> ponaPct;
  std::optional<double> pospPct;
};

double mse(const Image& original, const Image& restored);

// 10*log10(255^2 / mse); +infinity when mse == 0.
double psnr(const Image& original, const Image& restored);

// SNR(restored) - SNR(noisy), SNR = 10*log10(sum S^2 / sum (S-.)^2).
// nullopt when noisy == original (zero noise denominator).
std::optional<double> snri(const Image& original, const Image& noisy, const Image& restored);

// Percentage of mask=1 pixels whose absolute error strictly decreased.
// nullopt when the mask is empty.
std::optional<double> pona(const Image& original, const Image& noisy, const Image& restored,
                           const Mask& mask);

// Percentage of mask=0 pixels whose value changed. nullopt when every pixel
// is masked.
std::optional<double> posp(const Image& original, const Image& restored, const Mask& mask);

MetricsReport computeReport(const Image& original, const Image& noisy, const Image& restored,
                            const Mask* mask = nullptr);

}  // namespace nlrestore
