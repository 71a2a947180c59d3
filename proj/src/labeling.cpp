#include "trackseg/labeling.hpp"

#include <stdexcept>
#include <vector>

namespace trackseg {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;

  std::int32_t make() {
    parent.push_back(static_cast<std::int32_t>(parent.size()));
    return parent.back();
  }
  std::int32_t find(std::int32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Classic two-pass labeling; Neighbor() yields the already-scanned
// 8-neighbors (W, NW, N, NE) so a single forward pass sees every edge.
template <typename GetValue>
LabelImage label_connected(int w, int h, GetValue value) {
  std::vector<std::int32_t> provisional(static_cast<std::size_t>(w) * h, -1);
  UnionFind uf;
  uf.make();  // slot 0 unused so labels stay positive

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto v = value(x, y);
      if (v == 0) continue;
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      std::int32_t lab = -1;
      const int prior[4][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
      for (const auto& d : prior) {
        const int nx = x + d[0], ny = y + d[1];
        if (nx < 0 || nx >= w || ny < 0) continue;
        if (value(nx, ny) != v) continue;
        const std::int32_t nl =
            provisional[static_cast<std::size_t>(ny) * w + nx];
        if (lab < 0)
          lab = nl;
        else
          uf.unite(lab, nl);
      }
      if (lab < 0) lab = static_cast<std::int32_t>(uf.make());
      provisional[i] = lab;
    }
  }

  // Second pass: number the roots 1..N in order of first appearance.
  std::vector<std::int32_t> final_id(uf.parent.size(), 0);
  LabelImage out(w, h, 0);
  auto dst = out.pixels();
  std::int32_t next = 0;
  for (std::size_t i = 0; i < provisional.size(); ++i) {
    if (provisional[i] < 0) continue;
    const std::int32_t root = uf.find(provisional[i]);
    if (!final_id[root]) final_id[root] = ++next;
    dst[i] = final_id[root];
  }
  return out;
}

}  // namespace

LabelImage label_binary(const BinaryImage& bin) {
  return label_connected(bin.width(), bin.height(), [&](int x, int y) {
    return static_cast<std::int64_t>(bin(x, y) != 0);
  });
}

LabelImage label_equal_values(const ValueRaster& values) {
  for (auto v : values.pixels())
    if (v < 0)
      throw std::invalid_argument("label_equal_values: values must be >= 0");
  return label_connected(values.width(), values.height(),
                         [&](int x, int y) { return values(x, y); });
}

LabelImage label_equal_values(const LabelImage& values) {
  for (auto v : values.pixels())
    if (v < 0)
      throw std::invalid_argument("label_equal_values: values must be >= 0");
  return label_connected(values.width(), values.height(), [&](int x, int y) {
    return static_cast<std::int64_t>(values(x, y));
  });
}

}  // namespace trackseg
