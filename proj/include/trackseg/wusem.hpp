#ifndef TRACKSEG_WUSEM_HPP
#define TRACKSEG_WUSEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trackseg/image.hpp"

namespace trackseg {

struct WusemParams {
  int initial_radius = 10;   // r0, radius of the first erosion
  int delta_radius = 4;      // radius increment per round, >= 1
  std::int64_t min_area = 64;
  bool apply_rd_border_rule = true;
};

struct WusemResult {
  LabelImage labels;  // final regions, renumbered {1..N}
  int count = 0;      // N
  int iterations = 0; // erosion rounds that produced markers
  /// Per-round watershed outputs, kept only on request (diagnostics).
  std::optional<std::vector<LabelImage>> per_iteration_labels;
};

/// Watershed using successive erosions as markers.
///
/// Round k erodes the input with a disk of radius r0 + k*dr and stops
/// when the erosion is empty; each nonempty erosion is labeled and used
/// as the marker set for a watershed over the negated distance transform
/// of the input, masked to the input. The rounds' segmentations are then
/// combined, connected runs of identical segmentation history become one
/// region, small regions are dropped, and (optionally) regions touching
/// the bottom or right edge are removed.
WusemResult segmentation_wusem(const BinaryImage& bin,
                               const WusemParams& params,
                               bool keep_per_iteration = false);

/// Classic one-shot watershed: markers are the regional minima of the
/// negated distance transform, then the same area and border filters as
/// segmentation_wusem.
WusemResult classic_watershed_baseline(const BinaryImage& bin,
                                       std::int64_t min_area = 64,
                                       bool apply_rd_border_rule = true);

struct ObjectCenter {
  int id = 0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
};

/// One entry per region of a {1..N}-labeled image, ordered by id;
/// centroids are arithmetic means of member pixel coordinates.
std::vector<ObjectCenter> enumerate_objects(const LabelImage& labels);

/// Plateau-aware 8-connected regional minima of the relief, restricted
/// to the mask: a plateau is a minimum iff no pixel on its boundary is
/// strictly lower.
BinaryImage regional_minima(const Relief& relief, const BinaryImage& mask);

}  // namespace trackseg

#endif  // TRACKSEG_WUSEM_HPP
