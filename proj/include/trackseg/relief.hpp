#ifndef TRACKSEG_RELIEF_HPP
#define TRACKSEG_RELIEF_HPP

#include <cstdint>
#include <vector>

#include "trackseg/image.hpp"

namespace trackseg {

/// Exact squared Euclidean distance to the nearest background pixel,
/// with everything outside the image treated as background (so a
/// foreground pixel on the border is at squared distance 1). Two-pass
/// dimensional decomposition; integer arithmetic keeps results exact.
SquaredDistanceMap edt_squared(const BinaryImage& bin);

/// sqrt of edt_squared, in pixel units.
DistanceMap edt(const BinaryImage& bin);

/// Pointwise negation: blob centers become deep minima.
Relief negate(const DistanceMap& d);

/// Marker-controlled watershed by priority flood.
///
/// Flooding starts from the marker pixels and proceeds in non-decreasing
/// flood level, where the level of a front is the maximum relief along
/// its path; among equal levels, insertion order wins (strict FIFO), so
/// the output is fully deterministic. Marker pixels keep their labels,
/// pixels outside the mask stay 0, and mask pixels no marker can reach
/// stay 0.
///
/// Throws std::invalid_argument on dimension mismatch or when a marker
/// lies outside the mask.
LabelImage watershed(const Relief& relief, const LabelImage& markers,
                     const BinaryImage& mask);

namespace detail {
/// watershed with instrumentation: appends every popped flood level to
/// *popped (when non-null), in pop order. The sequence is non-decreasing.
LabelImage watershed_flood(const Relief& relief, const LabelImage& markers,
                           const BinaryImage& mask,
                           std::vector<double>* popped);
}  // namespace detail

}  // namespace trackseg

#endif  // TRACKSEG_RELIEF_HPP
