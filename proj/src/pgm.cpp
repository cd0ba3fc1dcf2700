#include "nlrestore/pgm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>

namespace nlrestore {

namespace {

struct Cursor {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  bool done() const { return pos >= bytes.size(); }
  std::uint8_t peek() const { return bytes[pos]; }

  void skipSpaceAndComments() {
    while (!done()) {
      const std::uint8_t c = peek();
      if (std::isspace(c)) {
        ++pos;
      } else if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  long readInt() {
    skipSpaceAndComments();
    if (done() || !std::isdigit(peek())) {
      throw PgmError(PgmFault::BadHeader, "pgm: expected integer in header");
    }
    long v = 0;
    while (!done() && std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<int>::max()) {
        throw PgmError(PgmFault::BadDimensions, "pgm: header value out of range");
      }
      ++pos;
    }
    return v;
  }
};

}  // namespace

Image loadPgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw PgmError(PgmFault::BadMagic, "pgm: missing P5 magic");
  }
  Cursor cur{bytes, 2};
  const long w = cur.readInt();
  const long h = cur.readInt();
  if (w <= 0 || h <= 0) {
    throw PgmError(PgmFault::BadDimensions, "pgm: nonpositive dimensions");
  }
  const long maxval = cur.readInt();
  if (maxval != 255) {
    throw PgmError(PgmFault::BadMaxval, "pgm: maxval must be 255");
  }
  if (cur.done() || !std::isspace(cur.peek())) {
    throw PgmError(PgmFault::BadHeader, "pgm: expected whitespace after maxval");
  }
  ++cur.pos;  // exactly one whitespace byte separates header and payload
  const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (bytes.size() - cur.pos < need) {
    throw PgmError(PgmFault::Truncated, "pgm: truncated payload");
  }
  Image img(h, w);
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      img(y, x) = bytes[cur.pos + static_cast<std::size_t>(y * w + x)];
    }
  }
  return img;
}

std::vector<std::uint8_t> savePgm(const Image& img) {
  char header[64];
  const int n = std::snprintf(header, sizeof(header), "P5\n%ld %ld\n255\n",
                              static_cast<long>(img.cols()), static_cast<long>(img.rows()));
  std::vector<std::uint8_t> out(header, header + n);
  out.reserve(out.size() + static_cast<std::size_t>(img.size()));
  for (Eigen::Index y = 0; y < img.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.cols(); ++x) {
      out.push_back(img(y, x));
    }
  }
  return out;
}

Image loadPgmFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return loadPgm(bytes);
}

void savePgmFile(const std::filesystem::path& path, const Image& img) {
  const auto bytes = savePgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace nlrestore
