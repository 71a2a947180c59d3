#include "trackseg/threshold.hpp"

#include <cmath>

namespace trackseg {

Histogram Histogram::of(const GrayImage& img) {
  Histogram h;
  for (auto v : img.pixels()) ++h.counts[v];
  return h;
}

std::int64_t Histogram::total() const noexcept {
  std::int64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

int Histogram::min_intensity() const noexcept {
  for (int i = 0; i < 256; ++i)
    if (counts[i]) return i;
  return -1;
}

int Histogram::max_intensity() const noexcept {
  for (int i = 255; i >= 0; --i)
    if (counts[i]) return i;
  return -1;
}

int Histogram::distinct_values() const noexcept {
  int n = 0;
  for (auto c : counts) n += (c != 0);
  return n;
}

namespace {

// Rounds halves toward the smaller integer, matching the tie-break rule.
int round_half_down(double x) {
  return static_cast<int>(std::ceil(x - 0.5));
}

struct ClassMeans {
  // cum_count[t] / cum_sum[t]: pixels with intensity <= t.
  std::array<std::int64_t, 256> cum_count{};
  std::array<std::int64_t, 256> cum_sum{};
  std::int64_t total_count = 0;
  std::int64_t total_sum = 0;

  explicit ClassMeans(const Histogram& h) {
    std::int64_t c = 0, s = 0;
    for (int i = 0; i < 256; ++i) {
      c += h.counts[i];
      s += h.counts[i] * i;
      cum_count[i] = c;
      cum_sum[i] = s;
    }
    total_count = c;
    total_sum = s;
  }

  bool both_classes_nonempty(int t) const {
    return cum_count[t] > 0 && cum_count[t] < total_count;
  }

  // (mean of intensities <= t  +  mean of intensities > t) / 2
  double halfway(int t) const {
    const double mu_below =
        static_cast<double>(cum_sum[t]) / static_cast<double>(cum_count[t]);
    const double mu_above =
        static_cast<double>(total_sum - cum_sum[t]) /
        static_cast<double>(total_count - cum_count[t]);
    return 0.5 * (mu_below + mu_above);
  }

  bool satisfies_criterion(int t) const {
    if (!both_classes_nonempty(t)) return false;
    return std::abs(t - halfway(t)) <= 0.5;
  }
};

}  // namespace

int isodata_threshold(const Histogram& hist) {
  if (hist.distinct_values() < 2)
    throw DegenerateHistogram(
        "isodata_threshold: image has fewer than two distinct intensities");

  const ClassMeans cm(hist);
  const int lo = hist.min_intensity();
  const int hi = hist.max_intensity();

  // Ridler-Calvard iteration from the global mean. The update map is
  // monotone in t, so the sequence is monotone and must stabilize.
  const double global_mean =
      static_cast<double>(cm.total_sum) / static_cast<double>(cm.total_count);
  int t = round_half_down(global_mean);
  if (t < lo) t = lo;
  if (t > hi - 1) t = hi - 1;
  for (int step = 0; step < 256; ++step) {
    const int next = round_half_down(cm.halfway(t));
    if (next == t) break;
    t = next;
  }

  // Several intensities can meet the halfway criterion (the halfway map
  // moves by less than one gray level per step near the fixed point);
  // return the smallest so the result does not depend on the start point.
  for (int s = lo; s < t; ++s) {
    if (cm.satisfies_criterion(s)) return s;
  }
  return t;
}

int isodata_threshold(const GrayImage& img) {
  return isodata_threshold(Histogram::of(img));
}

BinaryImage binarize(const GrayImage& img, int threshold, bool roi_is_dark) {
  if (threshold < 0 || threshold > 255)
    throw std::invalid_argument("binarize: threshold must be in [0, 255]");
  BinaryImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const bool below = src[i] <= threshold;
    dst[i] = (below == roi_is_dark) ? 1 : 0;
  }
  return out;
}

}  // namespace trackseg
