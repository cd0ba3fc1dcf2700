#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlrestore/pgm.hpp"
#include "nlrestore/rng.hpp"
#include "support/testimages.hpp"

#include <string>
#include <vector>

using namespace nlrestore;

namespace {

std::vector<std::uint8_t> bytesOf(const std::string& header,
                                  std::initializer_list<int> payload) {
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  for (int v : payload) bytes.push_back(static_cast<std::uint8_t>(v));
  return bytes;
}

}  // namespace

TEST_CASE("loadPgm decodes a minimal valid stream") {
  const auto img = loadPgm(bytesOf("P5\n2 1\n255\n", {0, 255}));
  REQUIRE(img.cols() == 2);
  REQUIRE(img.rows() == 1);
  CHECK(img(0, 0) == 0);
  CHECK(img(0, 1) == 255);
}

TEST_CASE("loadPgm skips comment lines") {
  const auto img = loadPgm(bytesOf("P5\n# c\n1 1\n255\n", {128}));
  REQUIRE(img.size() == 1);
  CHECK(img(0, 0) == 128);
}

TEST_CASE("loadPgm faults are distinct") {
  auto faultOf = [](const std::vector<std::uint8_t>& bytes) {
    try {
      loadPgm(bytes);
    } catch (const PgmError& e) {
      return e.fault();
    }
    FAIL("expected PgmError");
    return PgmFault::BadHeader;
  };
  CHECK(faultOf(bytesOf("P5\n2 2\n255\n", {1, 2, 3})) == PgmFault::Truncated);
  CHECK(faultOf(bytesOf("P6\n1 1\n255\n", {0})) == PgmFault::BadMagic);
  CHECK(faultOf(bytesOf("P5\n1 1\n254\n", {0})) == PgmFault::BadMaxval);
  CHECK(faultOf(bytesOf("P5\n0 1\n255\n", {})) == PgmFault::BadDimensions);
  CHECK(faultOf(bytesOf("P5\nx 1\n255\n", {0})) == PgmFault::BadHeader);
}

TEST_CASE("savePgm emits the exact header and payload") {
  Image one(1, 1);
  one(0, 0) = 0;
  CHECK(savePgm(one) == bytesOf("P5\n1 1\n255\n", {0}));

  Image two(1, 2);
  two(0, 0) = 7;
  two(0, 1) = 9;
  const auto bytes = savePgm(two);
  CHECK(std::vector<std::uint8_t>(bytes.end() - 2, bytes.end()) ==
        std::vector<std::uint8_t>{7, 9});
}

TEST_CASE("pgm roundtrip is the identity on random images") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    const int w = 1 + static_cast<int>(rng.nextBelow(80));
    const int h = 1 + static_cast<int>(rng.nextBelow(80));
    const Image img = testing::randomImage(w, h, rng);
    const Image back = loadPgm(savePgm(img));
    REQUIRE(back.rows() == img.rows());
    REQUIRE(back.cols() == img.cols());
    CHECK((back == img).all());
  }
}

TEST_CASE("extractWindow reads the raw interior neighborhood") {
  // the clean 3x3 array whose pixels a restoration pass must leave unaltered
  Image img(3, 3);
  const Sample vals[9] = {111, 214, 106, 236, 167, 214, 123, 223, 83};
  for (int i = 0; i < 9; ++i) img(i / 3, i % 3) = vals[i];
  const Window win = extractWindow(img, 1, 1, 3);
  for (int i = 0; i < 9; ++i) CHECK(win.values[static_cast<std::size_t>(i)] == vals[i]);
}

TEST_CASE("extractWindow replicates edges at the corner") {
  Image img(3, 3);
  for (int i = 0; i < 9; ++i) img(i / 3, i % 3) = static_cast<Sample>(i + 1);
  const Window win = extractWindow(img, 0, 0, 3);
  int cornerCount = 0;
  int rightCount = 0;
  int belowCount = 0;
  for (const Sample v : win.samples()) {
    cornerCount += v == img(0, 0);
    rightCount += v == img(0, 1);
    belowCount += v == img(1, 0);
  }
  CHECK(cornerCount == 4);
  CHECK(rightCount == 2);
  CHECK(belowCount == 2);
}

TEST_CASE("extractWindow size 5 at the center of a 5x5 image is the image") {
  SplitMix64 rng(5);
  const Image img = testing::randomImage(5, 5, rng);
  const Window win = extractWindow(img, 2, 2, 5);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) CHECK(win(y, x) == img(y, x));
  }
}

TEST_CASE("every window value is a pixel of the image") {
  SplitMix64 rng(99);
  const Image img = testing::randomImage(7, 6, rng, 50, 60);
  for (int y = 0; y < img.rows(); ++y) {
    for (int x = 0; x < img.cols(); ++x) {
      for (const int size : {3, 5}) {
        for (const Sample v : extractWindow(img, x, y, size).samples()) {
          CHECK((v >= 50 && v <= 60));
        }
      }
    }
  }
}

TEST_CASE("extractWindow rejects bad arguments") {
  Image img = Image::Zero(4, 4);
  CHECK_THROWS_AS(extractWindow(img, 4, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(extractWindow(img, -1, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(extractWindow(img, 1, 1, 4), std::invalid_argument);
}
