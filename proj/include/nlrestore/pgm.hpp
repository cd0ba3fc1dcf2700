#pragma once

#include "nlrestore/image.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlrestore {

enum class PgmFault {
  BadMagic,
  BadHeader,
  BadDimensions,
  BadMaxval,
  Truncated,
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  PgmFault fault() const { return fault_; }

 private:
  PgmFault fault_;
};

// Binary PGM (P5), maxval 255 only. Decoding is bit-exact; '#' comments are
// allowed in the header whitespace.
Image loadPgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> savePgm(const Image& img);

Image loadPgmFile(const std::filesystem::path& path);
void savePgmFile(const std::filesystem::path& path, const Image& img);

}  // namespace nlrestore
