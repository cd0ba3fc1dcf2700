#include "nlrestore/freqdomain.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlrestore {

namespace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// E(k, n) = exp(-2 pi i k n / N); the DFT along one axis is a product with E.
ComplexMatrix dftMatrix(Eigen::Index n) {
  ComplexMatrix e(n, n);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double phase = step * static_cast<double>(k) * static_cast<double>(j);
      e(k, j) = Complex(std::cos(phase), std::sin(phase));
    }
  }
  return e;
}

// (-1)^(x+y) modulation shifts DC to the grid center; it is its own inverse.
template <typename Derived>
auto centeringSigns(const Eigen::ArrayBase<Derived>& grid) {
  RealGrid signs(grid.rows(), grid.cols());
  for (Eigen::Index y = 0; y < grid.rows(); ++y) {
    for (Eigen::Index x = 0; x < grid.cols(); ++x) {
      signs(y, x) = ((x + y) & 1) ? -1.0 : 1.0;
    }
  }
  return signs;
}

void validate(const TransferSpec& t) {
  switch (t.kind) {
    case TransferSpec::Kind::IdealLowpass:
      if (t.cutoff <= 0.0) throw std::invalid_argument("ideal lowpass needs cutoff > 0");
      break;
    case TransferSpec::Kind::ButterworthLowpass:
      if (t.cutoff <= 0.0) throw std::invalid_argument("butterworth needs cutoff > 0");
      if (t.order < 1) throw std::invalid_argument("butterworth needs order >= 1");
      break;
    case TransferSpec::Kind::HomomorphicEmphasis:
      // The useful regime is 0 < gammaLow < 1 < gammaHigh; the degenerate
      // gammaLow == gammaHigh flat response is allowed as the identity limit.
      if (!(t.gammaLow > 0.0 && t.gammaLow <= t.gammaHigh)) {
        throw std::invalid_argument("homomorphic needs 0 < gammaLow <= gammaHigh");
      }
      if (t.cutoff <= 0.0) throw std::invalid_argument("homomorphic needs cutoff > 0");
      break;
  }
}

}  // namespace

double transferGain(const TransferSpec& spec, double dist) {
  switch (spec.kind) {
    case TransferSpec::Kind::IdealLowpass:
      return dist <= spec.cutoff ? 1.0 : 0.0;
    case TransferSpec::Kind::ButterworthLowpass:
      return 1.0 / (1.0 + std::pow(dist / spec.cutoff, 2.0 * spec.order));
    case TransferSpec::Kind::HomomorphicEmphasis: {
      const double d2 = dist * dist / (spec.cutoff * spec.cutoff);
      return (spec.gammaHigh - spec.gammaLow) * (1.0 - std::exp(-spec.sharpness * d2)) +
             spec.gammaLow;
    }
  }
  return 0.0;
}

Spectrum dft2(const RealGrid& grid) {
  const ComplexMatrix rowTransform = dftMatrix(grid.rows());
  const ComplexMatrix colTransform = dftMatrix(grid.cols());
  const ComplexMatrix centered =
      (grid * centeringSigns(grid)).matrix().cast<Complex>();
  return (rowTransform * centered * colTransform.transpose()).array();
}

RealGrid idft2(const Spectrum& spec) {
  const ComplexMatrix rowTransform = dftMatrix(spec.rows()).conjugate();
  const ComplexMatrix colTransform = dftMatrix(spec.cols()).conjugate();
  const double scale = 1.0 / static_cast<double>(spec.rows() * spec.cols());
  const ComplexMatrix g = rowTransform * spec.matrix() * colTransform.transpose();
  return g.array().real() * centeringSigns(spec) * scale;
}

Spectrum transfer(const Spectrum& spec, const TransferSpec& t) {
  validate(t);
  const Eigen::Index cy = spec.rows() / 2;
  const Eigen::Index cx = spec.cols() / 2;
  Spectrum out(spec.rows(), spec.cols());
  for (Eigen::Index v = 0; v < spec.rows(); ++v) {
    for (Eigen::Index u = 0; u < spec.cols(); ++u) {
      const double dist = std::hypot(static_cast<double>(u - cx), static_cast<double>(v - cy));
      out(v, u) = spec(v, u) * transferGain(t, dist);
    }
  }
  return out;
}

Image homomorphicEnhance(const Image& img, const TransferSpec& t) {
  if (t.kind != TransferSpec::Kind::HomomorphicEmphasis) {
    throw std::invalid_argument("homomorphicEnhance needs a homomorphic-emphasis spec");
  }
  validate(t);
  // +1 offset keeps the log finite for zero-valued pixels.
  const RealGrid z = (img.cast<double>() + 1.0).log();
  const RealGrid s = idft2(transfer(dft2(z), t));
  const RealGrid g = s.exp() - 1.0;

  const double lo = g.minCoeff();
  const double hi = g.maxCoeff();
  Image out(img.rows(), img.cols());
  for (Eigen::Index y = 0; y < img.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.cols(); ++x) {
      const double v = hi - lo < 1e-12
                           ? g(y, x)
                           : (g(y, x) - lo) * 255.0 / (hi - lo);
      const double rounded = std::floor(v + 0.5);  // half-up
      out(y, x) = static_cast<Sample>(std::clamp(rounded, 0.0, 255.0));
    }
  }
  return out;
}

}  // namespace nlrestore
