#ifndef TRACKSEG_PGM_HPP
#define TRACKSEG_PGM_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "trackseg/image.hpp"

namespace trackseg {

enum class PgmErrorKind {
  MalformedHeader,   // bad magic, missing/garbled dimensions
  MaxvalUnsupported, // maxval > 255
  TruncatedPayload,  // fewer samples than width*height
  BadSample,         // sample outside [0, maxval]
  Io,                // file missing / unreadable / unwritable
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Reads a P5 (binary) or P2 (ASCII) PGM file with maxval <= 255.
/// '#' comments in the header are honored.
GrayImage read_gray(const std::filesystem::path& path);

/// Writes the image as binary PGM with the exact header
/// "P5\n<w> <h>\n255\n" followed by the raw row-major payload.
void write_gray(const GrayImage& img, const std::filesystem::path& path);

}  // namespace trackseg

#endif  // TRACKSEG_PGM_HPP
