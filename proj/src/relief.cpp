#include "trackseg/relief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace trackseg {

namespace {

// Lower envelope of the parabolas i -> f[i] + (q - i)^2 (Felzenszwalb &
// Huttenlocher), evaluated at every integer q. f values are exact
// integers; intersections use doubles, which is safe because parabolas
// crossing exactly at an integer agree there.
void envelope_1d(const std::vector<std::int64_t>& f,
                 std::vector<std::int64_t>& out) {
  const int n = static_cast<int>(f.size());
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  auto intersect = [&](int p, int q) {
    return (static_cast<double>(f[q] - f[p]) +
            static_cast<double>(static_cast<std::int64_t>(q) * q -
                                static_cast<std::int64_t>(p) * p)) /
           (2.0 * (q - p));
  };
  for (int q = 1; q < n; ++q) {
    double s = intersect(v[k], q);
    while (s <= z[k]) {
      --k;
      s = intersect(v[k], q);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  out.resize(n);
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const std::int64_t d = q - v[k];
    out[q] = d * d + f[v[k]];
  }
}

}  // namespace

SquaredDistanceMap edt_squared(const BinaryImage& bin) {
  const int w = bin.width(), h = bin.height();

  // Pass 1: per column, row distance to the nearest background row,
  // counting the virtual background rows -1 and h.
  std::vector<std::int32_t> g(static_cast<std::size_t>(w) * h);
  for (int x = 0; x < w; ++x) {
    std::int32_t d = 1;  // distance to row -1
    for (int y = 0; y < h; ++y) {
      d = bin(x, y) ? d : 0;
      g[static_cast<std::size_t>(y) * w + x] = d;
      ++d;
    }
    d = 1;  // distance to row h
    for (int y = h - 1; y >= 0; --y) {
      d = bin(x, y) ? d : 0;
      auto& cell = g[static_cast<std::size_t>(y) * w + x];
      cell = std::min(cell, d);
      ++d;
    }
  }

  // Pass 2: per row, lower envelope across columns. Two virtual
  // all-background columns at x = -1 and x = w bound the row.
  SquaredDistanceMap out(w, h);
  std::vector<std::int64_t> f(static_cast<std::size_t>(w) + 2);
  std::vector<std::int64_t> env;
  for (int y = 0; y < h; ++y) {
    f[0] = 0;
    f[static_cast<std::size_t>(w) + 1] = 0;
    for (int x = 0; x < w; ++x) {
      const std::int64_t gy = g[static_cast<std::size_t>(y) * w + x];
      f[static_cast<std::size_t>(x) + 1] = gy * gy;
    }
    envelope_1d(f, env);
    for (int x = 0; x < w; ++x)
      out(x, y) = env[static_cast<std::size_t>(x) + 1];
  }
  return out;
}

DistanceMap edt(const BinaryImage& bin) {
  const SquaredDistanceMap sq = edt_squared(bin);
  DistanceMap out(sq.width(), sq.height());
  auto src = sq.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = std::sqrt(static_cast<double>(src[i]));
  return out;
}

Relief negate(const DistanceMap& d) {
  Relief out(d.width(), d.height());
  auto src = d.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = -src[i];
  return out;
}

namespace detail {

namespace {

struct FloodNode {
  double level;
  std::uint64_t seq;
  std::int32_t index;
};

struct FloodNodeAfter {
  bool operator()(const FloodNode& a, const FloodNode& b) const {
    if (a.level != b.level) return a.level > b.level;
    return a.seq > b.seq;
  }
};

}  // namespace

LabelImage watershed_flood(const Relief& relief, const LabelImage& markers,
                           const BinaryImage& mask,
                           std::vector<double>* popped) {
  require_same_size(relief, markers, "watershed");
  require_same_size(relief, mask, "watershed");
  const int w = relief.width(), h = relief.height();

  LabelImage out = markers;
  auto lab = out.pixels();
  auto msk = mask.pixels();
  auto rel = relief.pixels();

  std::priority_queue<FloodNode, std::vector<FloodNode>, FloodNodeAfter> heap;
  std::uint64_t seq = 0;
  for (std::size_t i = 0; i < lab.size(); ++i) {
    if (lab[i] == 0) continue;
    if (!msk[i])
      throw std::invalid_argument("watershed: marker outside mask");
    heap.push({rel[i], seq++, static_cast<std::int32_t>(i)});
  }

  static constexpr int kNbr[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                     {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
  while (!heap.empty()) {
    const FloodNode node = heap.top();
    heap.pop();
    if (popped) popped->push_back(node.level);
    const int x = node.index % w, y = node.index / w;
    const std::int32_t label = lab[node.index];
    for (const auto& d : kNbr) {
      const int nx = x + d[0], ny = y + d[1];
      if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
      const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
      if (!msk[ni] || lab[ni] != 0) continue;
      lab[ni] = label;
      // The level needed to reach a neighbor never drops below the level
      // already reached; this keeps popped levels non-decreasing.
      heap.push({std::max(rel[ni], node.level), seq++,
                 static_cast<std::int32_t>(ni)});
    }
  }
  return out;
}

}  // namespace detail

LabelImage watershed(const Relief& relief, const LabelImage& markers,
                     const BinaryImage& mask) {
  return detail::watershed_flood(relief, markers, mask, nullptr);
}

}  // namespace trackseg
