#include "trackseg/morphology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace trackseg {

StructuringElement disk(int radius) {
  if (radius < 0)
    throw std::invalid_argument("disk: radius must be non-negative");
  StructuringElement se;
  se.radius_ = radius;
  const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      if (static_cast<std::int64_t>(dx) * dx +
              static_cast<std::int64_t>(dy) * dy <=
          r2)
        se.offsets_.push_back({dx, dy});
  return se;
}

BinaryImage erode(const BinaryImage& bin, const StructuringElement& se) {
  const int w = bin.width(), h = bin.height();
  BinaryImage out(w, h, 0);
  const int r = se.radius();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!bin(x, y)) continue;  // (0,0) is in every disk
      // Any element reaching outside the image hits implicit background.
      if (x - r < 0 || y - r < 0 || x + r >= w || y + r >= h) continue;
      bool all = true;
      for (const auto& o : se.offsets()) {
        if (!bin(x + o.dx, y + o.dy)) {
          all = false;
          break;
        }
      }
      out(x, y) = all ? 1 : 0;
    }
  }
  return out;
}

BinaryImage fill_holes(const BinaryImage& bin) {
  const int w = bin.width(), h = bin.height();
  // Flood the background from the border (4-connectivity, the dual of the
  // 8-connected foreground); unreached background is enclosed.
  std::vector<std::uint8_t> reached(static_cast<std::size_t>(w) * h, 0);
  std::vector<int> stack;
  auto push = [&](int x, int y) {
    const std::size_t i = static_cast<std::size_t>(y) * w + x;
    if (!bin.pixels()[i] && !reached[i]) {
      reached[i] = 1;
      stack.push_back(static_cast<int>(i));
    }
  };
  for (int x = 0; x < w; ++x) {
    push(x, 0);
    push(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    push(0, y);
    push(w - 1, y);
  }
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const int x = i % w, y = i / w;
    if (x > 0) push(x - 1, y);
    if (x + 1 < w) push(x + 1, y);
    if (y > 0) push(x, y - 1);
    if (y + 1 < h) push(x, y + 1);
  }

  BinaryImage out(w, h);
  auto src = bin.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = (src[i] || !reached[i]) ? 1 : 0;
  return out;
}

namespace {

// Renumbers the labels listed in `keep` to 1..N in raster-scan order of
// first occurrence; everything else becomes background.
LabelImage relabel_kept(const LabelImage& labels,
                        const std::vector<std::uint8_t>& keep) {
  LabelImage out(labels.width(), labels.height(), 0);
  std::vector<std::int32_t> remap(keep.size(), 0);
  std::int32_t next = 0;
  auto src = labels.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::int32_t v = src[i];
    if (v <= 0 || !keep[v]) continue;
    if (!remap[v]) remap[v] = ++next;
    dst[i] = remap[v];
  }
  return out;
}

std::int32_t max_label(const LabelImage& labels) {
  std::int32_t m = 0;
  for (auto v : labels.pixels()) m = std::max(m, v);
  return m;
}

}  // namespace

LabelImage remove_small(const LabelImage& labels, std::int64_t min_area) {
  if (min_area < 0)
    throw std::invalid_argument("remove_small: min_area must be >= 0");
  const std::int32_t top = max_label(labels);
  std::vector<std::int64_t> area(static_cast<std::size_t>(top) + 1, 0);
  for (auto v : labels.pixels())
    if (v > 0) ++area[v];
  std::vector<std::uint8_t> keep(static_cast<std::size_t>(top) + 1, 0);
  for (std::int32_t l = 1; l <= top; ++l)
    keep[l] = (area[l] >= min_area && area[l] > 0) ? 1 : 0;
  return relabel_kept(labels, keep);
}

LabelImage clear_rd_border(const LabelImage& labels) {
  const int w = labels.width(), h = labels.height();
  const std::int32_t top = max_label(labels);
  std::vector<std::uint8_t> keep(static_cast<std::size_t>(top) + 1, 1);
  keep[0] = 0;
  for (int x = 0; x < w; ++x)
    if (labels(x, h - 1) > 0) keep[labels(x, h - 1)] = 0;
  for (int y = 0; y < h; ++y)
    if (labels(w - 1, y) > 0) keep[labels(w - 1, y)] = 0;
  return relabel_kept(labels, keep);
}

}  // namespace trackseg
