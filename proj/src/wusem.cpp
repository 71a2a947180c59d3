#include "trackseg/wusem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trackseg/labeling.hpp"
#include "trackseg/morphology.hpp"
#include "trackseg/relief.hpp"

namespace trackseg {

namespace {

// Erosion by disk(r) equals thresholding the squared distance transform:
// a pixel survives iff every background (or out-of-image) pixel is
// strictly farther than r. One transform serves every radius.
BinaryImage erosion_from_edt(const SquaredDistanceMap& sq, int radius) {
  const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
  BinaryImage out(sq.width(), sq.height());
  auto src = sq.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] > r2 ? 1 : 0;
  return out;
}

Relief relief_from_edt(const SquaredDistanceMap& sq) {
  Relief out(sq.width(), sq.height());
  auto src = sq.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = -std::sqrt(static_cast<double>(src[i]));
  return out;
}

// Folds one round's segmentation into the running region history:
// pixels stay in one region iff they agreed in every round so far.
// Pair-encoding each (history, segmentation) combination avoids the
// label collisions a plain per-pixel sum can produce.
void fold_segmentation(LabelImage& history, const LabelImage& seg) {
  std::int32_t seg_max = 0;
  for (auto v : seg.pixels()) seg_max = std::max(seg_max, v);
  ValueRaster code(history.width(), history.height());
  auto h = history.pixels();
  auto s = seg.pixels();
  auto c = code.pixels();
  const std::int64_t stride = static_cast<std::int64_t>(seg_max) + 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t combined = static_cast<std::int64_t>(h[i]) * stride + s[i];
    c[i] = (h[i] == 0 && s[i] == 0) ? 0 : combined + 1;
  }
  history = label_equal_values(code);
}

WusemResult finalize(LabelImage labels, std::int64_t min_area,
                     bool apply_rd_border_rule, int iterations) {
  labels = remove_small(labels, min_area);
  if (apply_rd_border_rule) labels = clear_rd_border(labels);
  std::int32_t count = 0;
  for (auto v : labels.pixels()) count = std::max(count, v);
  WusemResult res;
  res.labels = std::move(labels);
  res.count = count;
  res.iterations = iterations;
  return res;
}

}  // namespace

WusemResult segmentation_wusem(const BinaryImage& bin,
                               const WusemParams& params,
                               bool keep_per_iteration) {
  if (params.initial_radius < 0)
    throw std::invalid_argument("segmentation_wusem: initial_radius < 0");
  if (params.delta_radius < 1)
    throw std::invalid_argument("segmentation_wusem: delta_radius must be >= 1");
  if (params.min_area < 0)
    throw std::invalid_argument("segmentation_wusem: min_area < 0");

  WusemResult res;
  res.labels = LabelImage(bin.width(), bin.height(), 0);
  if (keep_per_iteration) res.per_iteration_labels.emplace();
  if (count_foreground(bin) == 0) return res;

  const SquaredDistanceMap sq = edt_squared(bin);
  const Relief relief = relief_from_edt(sq);

  LabelImage history(bin.width(), bin.height(), 0);
  int k = 0;
  for (;; ++k) {
    const int radius = params.initial_radius + k * params.delta_radius;
    const BinaryImage eroded = erosion_from_edt(sq, radius);
    if (count_foreground(eroded) == 0) break;
    const LabelImage markers = label_binary(eroded);
    const LabelImage seg = watershed(relief, markers, bin);
    fold_segmentation(history, seg);
    if (keep_per_iteration) res.per_iteration_labels->push_back(seg);
  }

  WusemResult out = finalize(std::move(history), params.min_area,
                             params.apply_rd_border_rule, k);
  out.per_iteration_labels = std::move(res.per_iteration_labels);
  return out;
}

WusemResult classic_watershed_baseline(const BinaryImage& bin,
                                       std::int64_t min_area,
                                       bool apply_rd_border_rule) {
  if (min_area < 0)
    throw std::invalid_argument("classic_watershed_baseline: min_area < 0");
  WusemResult res;
  res.labels = LabelImage(bin.width(), bin.height(), 0);
  if (count_foreground(bin) == 0) return res;

  const SquaredDistanceMap sq = edt_squared(bin);
  const Relief relief = relief_from_edt(sq);
  const BinaryImage minima = regional_minima(relief, bin);
  const LabelImage markers = label_binary(minima);
  LabelImage seg = watershed(relief, markers, bin);
  seg = label_equal_values(seg);  // renumber to scan order
  return finalize(std::move(seg), min_area, apply_rd_border_rule, 1);
}

std::vector<ObjectCenter> enumerate_objects(const LabelImage& labels) {
  std::int32_t top = 0;
  for (auto v : labels.pixels()) {
    if (v < 0)
      throw std::invalid_argument("enumerate_objects: negative label");
    top = std::max(top, v);
  }
  std::vector<std::int64_t> n(static_cast<std::size_t>(top) + 1, 0);
  std::vector<std::int64_t> sx(static_cast<std::size_t>(top) + 1, 0);
  std::vector<std::int64_t> sy(static_cast<std::size_t>(top) + 1, 0);
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const std::int32_t v = labels(x, y);
      if (!v) continue;
      ++n[v];
      sx[v] += x;
      sy[v] += y;
    }
  }
  for (std::int32_t l = 1; l <= top; ++l)
    if (!n[l])
      throw std::invalid_argument(
          "enumerate_objects: labels must be exactly {1..N}");
  std::vector<ObjectCenter> out;
  out.reserve(top);
  for (std::int32_t l = 1; l <= top; ++l)
    out.push_back({l, static_cast<double>(sx[l]) / n[l],
                   static_cast<double>(sy[l]) / n[l]});
  return out;
}

BinaryImage regional_minima(const Relief& relief, const BinaryImage& mask) {
  require_same_size(relief, mask, "regional_minima");
  const int w = relief.width(), h = relief.height();
  BinaryImage out(w, h, 0);
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::int32_t> plateau, stack;

  static constexpr int kNbr[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                     {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      const std::size_t i0 = static_cast<std::size_t>(y0) * w + x0;
      if (!mask.pixels()[i0] || visited[i0]) continue;
      const double level = relief(x0, y0);
      bool is_minimum = true;
      plateau.clear();
      stack.assign(1, static_cast<std::int32_t>(i0));
      visited[i0] = 1;
      while (!stack.empty()) {
        const std::int32_t i = stack.back();
        stack.pop_back();
        plateau.push_back(i);
        const int x = i % w, y = i / w;
        for (const auto& d : kNbr) {
          const int nx = x + d[0], ny = y + d[1];
          if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
          const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
          if (!mask.pixels()[ni]) continue;
          const double nl = relief(nx, ny);
          if (nl < level) {
            is_minimum = false;
          } else if (nl == level && !visited[ni]) {
            visited[ni] = 1;
            stack.push_back(static_cast<std::int32_t>(ni));
          }
        }
      }
      if (is_minimum)
        for (auto i : plateau) out.pixels()[i] = 1;
    }
  }
  return out;
}

}  // namespace trackseg
