#include "trackseg/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace trackseg {

void write_label_csv(const LabelImage& labels,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CsvError("cannot create " + path.string());
  std::string line;
  for (int y = 0; y < labels.height(); ++y) {
    line.clear();
    for (int x = 0; x < labels.width(); ++x) {
      if (x) line += ',';
      line += std::to_string(labels(x, y));
    }
    line += '\n';
    out << line;
  }
  if (!out) throw CsvError("write failed: " + path.string());
}

LabelImage read_label_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open " + path.string());

  std::vector<std::int32_t> data;
  int width = -1, height = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int cells = 0;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      std::int32_t v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || v < 0)
        throw CsvError(path.string() + ":" + std::to_string(line_no) +
                       ": expected non-negative integer cell");
      data.push_back(v);
      ++cells;
      p = next;
      if (p < end) {
        if (*p != ',')
          throw CsvError(path.string() + ":" + std::to_string(line_no) +
                         ": expected ',' between cells");
        ++p;
        if (p == end)
          throw CsvError(path.string() + ":" + std::to_string(line_no) +
                         ": trailing comma");
      }
    }
    if (width < 0) width = cells;
    if (cells != width)
      throw CsvError(path.string() + ":" + std::to_string(line_no) +
                     ": ragged row (" + std::to_string(cells) + " cells, expected " +
                     std::to_string(width) + ")");
    ++height;
  }
  if (width < 1 || height < 1)
    throw CsvError(path.string() + ": empty label map");
  return LabelImage(width, height, std::move(data));
}

}  // namespace trackseg
