#ifndef TRACKSEG_MORPHOLOGY_HPP
#define TRACKSEG_MORPHOLOGY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "trackseg/image.hpp"

namespace trackseg {

struct PixelOffset {
  int dx = 0;
  int dy = 0;
  bool operator==(const PixelOffset&) const = default;
};

/// Digital Euclidean disk: all integer offsets with dx^2 + dy^2 <= r^2.
/// Always contains (0,0) and is point-symmetric.
class StructuringElement {
 public:
  int radius() const noexcept { return radius_; }
  std::span<const PixelOffset> offsets() const noexcept { return offsets_; }

  friend StructuringElement disk(int radius);

 private:
  StructuringElement() = default;
  int radius_ = 0;
  std::vector<PixelOffset> offsets_;
};

StructuringElement disk(int radius);

/// A pixel survives iff the whole structuring element, centered on it,
/// lies inside the image and on foreground. Out-of-bounds counts as
/// background, so regions also shrink away from the image border.
BinaryImage erode(const BinaryImage& bin, const StructuringElement& se);

/// Adds every background component that is not 4-connected to the image
/// border. Extensive and idempotent.
BinaryImage fill_holes(const BinaryImage& bin);

/// Drops regions with area < min_area and renumbers the survivors to
/// {1..N} in raster-scan order of first occurrence.
LabelImage remove_small(const LabelImage& labels, std::int64_t min_area);

/// "Lower right corner" counting rule: removes every region with a pixel
/// in the last row or last column, keeps regions touching only the top or
/// left edge, and renumbers survivors to {1..N} in scan order.
LabelImage clear_rd_border(const LabelImage& labels);

}  // namespace trackseg

#endif  // TRACKSEG_MORPHOLOGY_HPP
