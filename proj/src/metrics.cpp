#include "nlrestore/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlrestore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void requireSameSize(const Image& a, const Image& b) {
  if (!sameSize(a, b)) throw std::invalid_argument("metrics: dimension mismatch");
}

// Exact integer accumulation; one float division at the end. 64-bit holds
// 4096^2 * 255^2 with room to spare.
std::int64_t squaredErrorSum(const Image& a, const Image& b) {
  return (a.cast<std::int64_t>() - b.cast<std::int64_t>()).square().sum();
}

std::optional<double> snrDb(std::int64_t signalSq, std::int64_t errorSq) {
  if (signalSq == 0) return std::nullopt;
  if (errorSq == 0) return kInf;
  return 10.0 * std::log10(static_cast<double>(signalSq) / static_cast<double>(errorSq));
}

}  // namespace

double mse(const Image& original, const Image& restored) {
  requireSameSize(original, restored);
  return static_cast<double>(squaredErrorSum(original, restored)) /
         static_cast<double>(original.size());
}

double psnr(const Image& original, const Image& restored) {
  const double err = mse(original, restored);
  if (err == 0.0) return kInf;
  return 10.0 * std::log10(255.0 * 255.0 / err);
}

std::optional<double> snri(const Image& original, const Image& noisy, const Image& restored) {
  requireSameSize(original, noisy);
  requireSameSize(original, restored);
  const std::int64_t signalSq = original.cast<std::int64_t>().square().sum();
  const auto noisySnr = snrDb(signalSq, squaredErrorSum(original, noisy));
  const auto restoredSnr = snrDb(signalSq, squaredErrorSum(original, restored));
  if (!noisySnr || !restoredSnr || *noisySnr == kInf) return std::nullopt;
  if (*restoredSnr == kInf) return kInf;
  return *restoredSnr - *noisySnr;
}

std::optional<double> pona(const Image& original, const Image& noisy, const Image& restored,
                           const Mask& mask) {
  requireSameSize(original, noisy);
  requireSameSize(original, restored);
  if (mask.rows() != original.rows() || mask.cols() != original.cols()) {
    throw std::invalid_argument("metrics: mask dimension mismatch");
  }
  std::int64_t noisyCount = 0;
  std::int64_t improved = 0;
  for (Eigen::Index y = 0; y < original.rows(); ++y) {
    for (Eigen::Index x = 0; x < original.cols(); ++x) {
      if (mask(y, x) == 0) continue;
      ++noisyCount;
      const int s = original(y, x);
      if (std::abs(static_cast<int>(restored(y, x)) - s) <
          std::abs(static_cast<int>(noisy(y, x)) - s)) {
        ++improved;
      }
    }
  }
  if (noisyCount == 0) return std::nullopt;
  return 100.0 * static_cast<double>(improved) / static_cast<double>(noisyCount);
}

std::optional<double> posp(const Image& original, const Image& restored, const Mask& mask) {
  requireSameSize(original, restored);
  if (mask.rows() != original.rows() || mask.cols() != original.cols()) {
    throw std::invalid_argument("metrics: mask dimension mismatch");
  }
  std::int64_t cleanCount = 0;
  std::int64_t spoiled = 0;
  for (Eigen::Index y = 0; y < original.rows(); ++y) {
    for (Eigen::Index x = 0; x < original.cols(); ++x) {
      if (mask(y, x) != 0) continue;
      ++cleanCount;
      spoiled += restored(y, x) != original(y, x) ? 1 : 0;
    }
  }
  if (cleanCount == 0) return std::nullopt;
  return 100.0 * static_cast<double>(spoiled) / static_cast<double>(cleanCount);
}

MetricsReport computeReport(const Image& original, const Image& noisy, const Image& restored,
                            const Mask* mask) {
  MetricsReport rep;
  rep.mse = mse(original, restored);
  rep.psnrDb = psnr(original, restored);
  const std::int64_t signalSq = original.cast<std::int64_t>().square().sum();
  rep.snrNoisyDb = snrDb(signalSq, squaredErrorSum(original, noisy));
  rep.snrRestoredDb = snrDb(signalSq, squaredErrorSum(original, restored));
  rep.snriDb = snri(original, noisy, restored);
  if (mask != nullptr) {
    rep.ponaPct = pona(original, noisy, restored, *mask);
    rep.pospPct = posp(original, restored, *mask);
  }
  return rep;
}

}  // namespace nlrestore
