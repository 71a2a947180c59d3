#ifndef TRACKSEG_CSV_HPP
#define TRACKSEG_CSV_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "trackseg/image.hpp"

namespace trackseg {

/// Parse/IO failure carrying "<path>:<line>" context in the message.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One CSV row per image row, integer cells, LF line endings,
/// no trailing comma. Byte output is deterministic.
void write_label_csv(const LabelImage& labels,
                     const std::filesystem::path& path);

/// Inverse of write_label_csv. Rows must be rectangular and cells
/// non-negative integers.
LabelImage read_label_csv(const std::filesystem::path& path);

}  // namespace trackseg

#endif  // TRACKSEG_CSV_HPP
