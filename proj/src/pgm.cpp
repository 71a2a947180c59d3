#include "trackseg/pgm.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace trackseg {

namespace {

// Skips whitespace and '#'-to-end-of-line comments; returns false on EOF.
bool skip_separators(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == EOF) return false;
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
      continue;
    }
    if (!std::isspace(c)) return true;
    in.get();
  }
}

bool read_header_int(std::istream& in, int& out) {
  if (!skip_separators(in)) return false;
  if (!std::isdigit(in.peek())) return false;
  long long v = 0;
  while (std::isdigit(in.peek())) {
    v = v * 10 + (in.get() - '0');
    if (v > 1 << 30) return false;
  }
  out = static_cast<int>(v);
  return true;
}

}  // namespace

GrayImage read_gray(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PgmError(PgmErrorKind::Io, "cannot open " + path.string());

  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || (m1 != '2' && m1 != '5'))
    throw PgmError(PgmErrorKind::MalformedHeader,
                   path.string() + ": not a P2/P5 PGM file");
  const bool binary = (m1 == '5');

  int width = 0, height = 0, maxval = 0;
  if (!read_header_int(in, width) || !read_header_int(in, height) ||
      !read_header_int(in, maxval) || width < 1 || height < 1 || maxval < 1)
    throw PgmError(PgmErrorKind::MalformedHeader,
                   path.string() + ": malformed PGM header");
  if (maxval > 255)
    throw PgmError(PgmErrorKind::MaxvalUnsupported,
                   path.string() + ": maxval " + std::to_string(maxval) +
                       " exceeds 255");

  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> data(n);

  if (binary) {
    // Exactly one whitespace byte separates the header from the payload.
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
      throw PgmError(PgmErrorKind::MalformedHeader,
                     path.string() + ": missing payload separator");
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
      throw PgmError(PgmErrorKind::TruncatedPayload,
                     path.string() + ": truncated P5 payload");
    for (auto v : data)
      if (v > maxval)
        throw PgmError(PgmErrorKind::BadSample,
                       path.string() + ": sample exceeds maxval");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      int v = 0;
      if (!read_header_int(in, v))
        throw PgmError(PgmErrorKind::TruncatedPayload,
                       path.string() + ": truncated P2 payload");
      if (v > maxval)
        throw PgmError(PgmErrorKind::BadSample,
                       path.string() + ": sample exceeds maxval");
      data[i] = static_cast<std::uint8_t>(v);
    }
  }

  return GrayImage(width, height, std::move(data));
}

void write_gray(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw PgmError(PgmErrorKind::Io, "cannot create " + path.string());
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixel_count()));
  if (!out)
    throw PgmError(PgmErrorKind::Io, "write failed: " + path.string());
}

}  // namespace trackseg
