#ifndef TRACKSEG_IMAGE_HPP
#define TRACKSEG_IMAGE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trackseg {

/// Row-major 2-D raster. Pixel (x, y) lives at data[y * width + x];
/// the origin is the top-left corner, x grows rightward, y downward.
/// The Tag parameter keeps semantically different rasters (gray values,
/// masks, labels) from mixing silently.
template <typename T, typename Tag>
class Image {
 public:
  using value_type = T;

  Image() = default;

  Image(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  Image(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height)
      throw std::invalid_argument("Image: data length must be width*height");
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::int64_t pixel_count() const noexcept {
    return static_cast<std::int64_t>(width_) * height_;
  }
  bool empty() const noexcept { return data_.empty(); }

  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  T operator()(int x, int y) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  T& operator()(int x, int y) noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const T> pixels() const noexcept { return data_; }
  std::span<T> pixels() noexcept { return data_; }

  bool operator==(const Image&) const = default;

 private:
  static void check_dims(int width, int height) {
    if (width < 1 || height < 1)
      throw std::invalid_argument("Image: width and height must be >= 1");
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

/// 8-bit single-channel photomicrograph, intensities in [0, 255].
using GrayImage = Image<std::uint8_t, struct GrayTag>;

/// Boolean raster stored as 0/1 bytes; nonzero means foreground.
using BinaryImage = Image<std::uint8_t, struct BinaryTag>;

/// Non-negative integer raster; 0 is background, k > 0 a region id.
using LabelImage = Image<std::int32_t, struct LabelTag>;

/// Exact Euclidean distances in pixel units.
using DistanceMap = Image<double, struct DistanceTag>;

/// Squared Euclidean distances; integral, so comparisons are exact.
using SquaredDistanceMap = Image<std::int64_t, struct SquaredDistanceTag>;

/// Altitude field minimized by watershed flooding.
using Relief = Image<double, struct ReliefTag>;

template <typename A, typename B>
bool same_size(const A& a, const B& b) noexcept {
  return a.width() == b.width() && a.height() == b.height();
}

template <typename A, typename B>
void require_same_size(const A& a, const B& b, const std::string& what) {
  if (!same_size(a, b))
    throw std::invalid_argument(what + ": image dimensions differ");
}

inline std::int64_t count_foreground(const BinaryImage& bin) noexcept {
  std::int64_t n = 0;
  for (auto v : bin.pixels()) n += (v != 0);
  return n;
}

}  // namespace trackseg

#endif  // TRACKSEG_IMAGE_HPP
