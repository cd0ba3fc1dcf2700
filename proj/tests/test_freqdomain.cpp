#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlrestore/freqdomain.hpp"
#include "support/testimages.hpp"

#include <cmath>

using namespace nlrestore;

namespace {

RealGrid randomGrid(int w, int h, SplitMix64& rng) {
  RealGrid g(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) g(y, x) = rng.nextUnit() * 255.0;
  }
  return g;
}

}  // namespace

TEST_CASE("constant image concentrates at the centered DC bin") {
  const Spectrum spec = dft2(RealGrid::Constant(4, 6, 3.0));
  CHECK(std::abs(spec(2, 3)) == doctest::Approx(3.0 * 24.0));
  double offDc = 0.0;
  for (int v = 0; v < 4; ++v) {
    for (int u = 0; u < 6; ++u) {
      if (v != 2 || u != 3) offDc += std::abs(spec(v, u));
    }
  }
  CHECK(offDc < 1e-9);
}

TEST_CASE("unit impulse spreads unit magnitude everywhere") {
  RealGrid g = RealGrid::Zero(8, 8);
  g(0, 0) = 1.0;
  const Spectrum spec = dft2(g);
  for (int v = 0; v < 8; ++v) {
    for (int u = 0; u < 8; ++u) CHECK(std::abs(spec(v, u)) == doctest::Approx(1.0));
  }
}

TEST_CASE("checkerboard energy sits at the Nyquist bin") {
  RealGrid g(4, 4);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) g(y, x) = ((x + y) % 2 == 0) ? 255.0 : 0.0;
  }
  const Spectrum spec = dft2(g);
  // DC (center) and the Nyquist component (corner after centering) split the mass
  CHECK(std::abs(spec(2, 2)) == doctest::Approx(127.5 * 16.0));
  CHECK(std::abs(spec(0, 0)) == doctest::Approx(127.5 * 16.0));
  double rest = 0.0;
  for (int v = 0; v < 4; ++v) {
    for (int u = 0; u < 4; ++u) {
      if ((v == 2 && u == 2) || (v == 0 && u == 0)) continue;
      rest += std::abs(spec(v, u));
    }
  }
  CHECK(rest < 1e-9);
}

TEST_CASE("idft2 inverts dft2 to 1e-9 scale") {
  SplitMix64 rng(11);
  const RealGrid g = randomGrid(32, 32, rng);
  const RealGrid back = idft2(dft2(g));
  CHECK((back - g).abs().maxCoeff() < 1e-9 * 255.0);

  CHECK(idft2(Spectrum::Zero(5, 7)).abs().maxCoeff() == 0.0);

  Spectrum dcOnly = Spectrum::Zero(6, 4);
  dcOnly(3, 2) = std::complex<double>(6.0 * 4.0 * 9.0, 0.0);
  const RealGrid flat = idft2(dcOnly);
  CHECK((flat - 9.0).abs().maxCoeff() < 1e-9);
}

TEST_CASE("dft2 is linear") {
  SplitMix64 rng(13);
  const RealGrid f = randomGrid(16, 12, rng);
  const RealGrid g = randomGrid(16, 12, rng);
  const Spectrum lhs = dft2(2.5 * f + (-1.25) * g);
  const Spectrum rhs = 2.5 * dft2(f) + (-1.25) * dft2(g);
  CHECK((lhs - rhs).abs().maxCoeff() < 1e-9 * 255.0 * 16 * 12);
}

TEST_CASE("parseval holds to 1e-6 relative") {
  SplitMix64 rng(17);
  const RealGrid g = randomGrid(24, 18, rng);
  const Spectrum spec = dft2(g);
  const double spatial = g.square().sum();
  const double frequency = spec.abs2().sum() / static_cast<double>(g.size());
  CHECK(std::abs(spatial - frequency) < 1e-6 * spatial);
}

TEST_CASE("log-domain additivity of the illumination/reflectance split") {
  const Image prod = testing::illuminationCheckerboard(16, 16);
  // ln i + ln r transforms to the sum of the individual transforms
  RealGrid lnI(16, 16);
  RealGrid lnR(16, 16);
  for (int y = 0; y < 16; ++y) {
    const double illum = 0.25 + 0.75 * y / 15.0;
    for (int x = 0; x < 16; ++x) {
      lnI(y, x) = std::log(illum);
      lnR(y, x) = std::log(((x + y) & 1) ? 0.95 : 0.05);
    }
  }
  const Spectrum lhs = dft2(lnI + lnR);
  const Spectrum rhs = dft2(lnI) + dft2(lnR);
  CHECK((lhs - rhs).abs().maxCoeff() < 1e-9 * 16 * 16);
  (void)prod;
}

TEST_CASE("transfer gains") {
  TransferSpec ideal{TransferSpec::Kind::IdealLowpass, 10.0};
  CHECK(transferGain(ideal, 0.0) == 1.0);
  CHECK(transferGain(ideal, 10.0) == 1.0);
  CHECK(transferGain(ideal, 10.001) == 0.0);

  TransferSpec butter{TransferSpec::Kind::ButterworthLowpass, 8.0};
  for (int order = 1; order <= 4; ++order) {
    butter.order = order;
    CHECK(transferGain(butter, 8.0) == doctest::Approx(0.5));
  }

  TransferSpec homo;
  homo.kind = TransferSpec::Kind::HomomorphicEmphasis;
  homo.cutoff = 8.0;
  homo.gammaLow = 0.4;
  homo.gammaHigh = 1.6;
  homo.sharpness = 1.0;
  CHECK(transferGain(homo, 0.0) == doctest::Approx(0.4));
  CHECK(transferGain(homo, 1e6) == doctest::Approx(1.6));
  double last = -1.0;
  for (double d = 0.0; d < 40.0; d += 0.5) {
    const double gain = transferGain(homo, d);
    CHECK(gain >= last);
    last = gain;
  }
}

TEST_CASE("ideal transfer with huge cutoff is the identity") {
  SplitMix64 rng(19);
  const Spectrum spec = dft2(randomGrid(12, 12, rng));
  TransferSpec ideal{TransferSpec::Kind::IdealLowpass, 1e9};
  CHECK((transfer(spec, ideal) - spec).abs().maxCoeff() == 0.0);

  TransferSpec bad{TransferSpec::Kind::IdealLowpass, 0.0};
  CHECK_THROWS_AS(transfer(spec, bad), std::invalid_argument);
}

TEST_CASE("flat homomorphic response reproduces the input") {
  SplitMix64 rng(23);
  const Image img = testing::randomImage(24, 24, rng, 0, 255);
  TransferSpec flat;
  flat.kind = TransferSpec::Kind::HomomorphicEmphasis;
  flat.cutoff = 8.0;
  flat.gammaLow = 1.0;
  flat.gammaHigh = 1.0;
  const Image out = homomorphicEnhance(img, flat);
  // identity transfer; only rescaling round-off may move a value by one
  int maxDiff = 0;
  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 24; ++x) {
      maxDiff = std::max(maxDiff, std::abs(static_cast<int>(out(y, x)) - img(y, x)));
    }
  }
  CHECK(maxDiff <= 1);
}

TEST_CASE("homomorphic enhancement of a constant stays constant") {
  TransferSpec t;
  t.kind = TransferSpec::Kind::HomomorphicEmphasis;
  t.cutoff = 4.0;
  t.gammaLow = 0.5;
  t.gammaHigh = 1.5;
  const Image out = homomorphicEnhance(Image::Constant(16, 16, 80), t);
  CHECK((out == out(0, 0)).all());
}

TEST_CASE("homomorphic filtering flattens illumination, keeps reflectance") {
  const Image scene = testing::illuminationCheckerboard(64, 64);
  TransferSpec t;
  t.kind = TransferSpec::Kind::HomomorphicEmphasis;
  t.cutoff = 8.0;
  t.gammaLow = 0.25;
  t.gammaHigh = 1.1;
  t.sharpness = 1.0;
  const Image out = homomorphicEnhance(scene, t);

  const double varBefore = testing::rowMeanVariance(scene);
  const double varAfter = testing::rowMeanVariance(out);
  CHECK(varAfter <= 0.5 * varBefore);

  const double contrastBefore = testing::horizontalContrast(scene);
  const double contrastAfter = testing::horizontalContrast(out);
  CHECK(std::abs(contrastAfter - contrastBefore) <= 0.2 * contrastBefore);
}
