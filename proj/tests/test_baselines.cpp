#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlrestore/baselines.hpp"
#include "nlrestore/degrade.hpp"
#include "nlrestore/restore.hpp"
#include "support/testimages.hpp"

using namespace nlrestore;

TEST_CASE("smf basics") {
  const Image flat = Image::Constant(8, 8, 44);
  CHECK((smf(flat, 3) == flat).all());
  CHECK((smf(flat, 5) == flat).all());

  Image one = Image::Constant(7, 7, 100);
  one(3, 3) = 255;
  CHECK(smf(one, 3)(3, 3) == 100);

  CHECK_THROWS_AS(smf(flat, 7), std::invalid_argument);
}

TEST_CASE("smf preserves a vertical step edge") {
  Image step(6, 6);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 6; ++x) step(y, x) = x < 3 ? 0 : 255;
  }
  // each window keeps a majority of its own side
  CHECK((smf(step, 3) == step).all());
}

TEST_CASE("cwmf reduces to smf at weight one and to identity at weight nine") {
  SplitMix64 rng(17);
  const Image img = testing::randomImage(24, 20, rng);
  CHECK((cwmf(img, 1) == smf(img, 3)).all());
  CHECK((cwmf(img, 9) == img).all());
  CHECK_THROWS_AS(cwmf(img, 4), std::invalid_argument);
}

TEST_CASE("cwmf weight three still rejects an isolated impulse") {
  Image img = Image::Constant(7, 7, 100);
  img(3, 3) = 255;
  // multiset {100 x 8, 255 x 3} has median 100
  CHECK(cwmf(img, 3)(3, 3) == 100);
}

TEST_CASE("tsmf decision branches") {
  SplitMix64 rng(23);
  const Image img = testing::randomImage(16, 16, rng);
  CHECK((tsmf(img, 255) == img).all());  // threshold beyond any difference

  Image impulse = Image::Constant(7, 7, 100);
  impulse(3, 3) = 255;
  const Image m = smf(impulse, 3);
  CHECK(tsmf(impulse, 0)(3, 3) == m(3, 3));  // full median correction

  Image texture = Image::Constant(7, 7, 100);
  texture(3, 3) = 105;  // d1 = 5 <= 20
  CHECK(tsmf(texture, 20)(3, 3) == 105);
}

TEST_CASE("tsmf with zero threshold applies the median where it may act") {
  SplitMix64 rng(29);
  const Image img = testing::randomImage(20, 20, rng);
  const Image m = smf(img, 3);
  const Image c = cwmf(img, 3);
  const Image out = tsmf(img, 0);
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 20; ++x) {
      if (img(y, x) != m(y, x) && img(y, x) != c(y, x)) {
        CHECK(out(y, x) == m(y, x));
      }
    }
  }
}

TEST_CASE("adaptive median keeps mid-range pixels and kills impulses") {
  Image img = Image::Constant(9, 9, 100);
  img(4, 4) = 0;
  CHECK(adaptiveMedian(img, 7)(4, 4) == 100);

  Image textured(5, 5);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) textured(y, x) = static_cast<Sample>(90 + (x + y * 5) % 21);
  }
  // center 102 lies strictly between window extremes
  CHECK(adaptiveMedian(textured, 7)(2, 2) == textured(2, 2));

  CHECK_THROWS_AS(adaptiveMedian(img, 4), std::invalid_argument);
}

TEST_CASE("adaptive median grows to the maximum window under heavy noise") {
  // 3x3 and 5x5 around the center stay median-zero; the 7x7 median resolves
  Image img = Image::Constant(9, 9, 100);
  for (int y = 3; y <= 5; ++y) {
    for (int x = 3; x <= 5; ++x) img(y, x) = 0;  // 3x3 block of zeros
  }
  img(2, 3) = 0;
  img(2, 5) = 0;
  img(3, 2) = 0;
  img(5, 2) = 0;  // 13 zeros inside the 5x5
  const Image out = adaptiveMedian(img, 7);
  // 7x7 window holds 13 zeros and 36 hundreds: median 100, center 0 == min
  CHECK(out(4, 4) == 100);
}

TEST_CASE("adaptive median leaves strictly-interior pixels unchanged") {
  SplitMix64 rng(37);
  Image img = testing::randomImage(32, 32, rng, 1, 254);
  SplitMix64 noise(38);
  const auto degraded = injectImpulse(img, 0.2, noise);
  const Image out = adaptiveMedian(degraded.image, 7);
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) {
      const Window win = extractWindow(degraded.image, x, y, 3);
      const auto samples = win.samples();
      const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
      const Sample center = degraded.image(y, x);
      if (*mn < center && center < *mx) {
        CHECK(out(y, x) == center);
      }
    }
  }
}

TEST_CASE("baselines stay in range and are deterministic") {
  SplitMix64 rng(41);
  const Image img = testing::randomImage(24, 24, rng);
  const BaselineConfig cfg;
  const Image a = tsmf(img, cfg.tsmfThreshold, cfg.cwmfCenterWeight);
  const Image b = tsmf(img, cfg.tsmfThreshold, cfg.cwmfCenterWeight);
  CHECK((a == b).all());
  CHECK((adaptiveMedian(img, cfg.amfMaxWindow) == adaptiveMedian(img, cfg.amfMaxWindow)).all());
}
