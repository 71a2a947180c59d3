#ifndef TRACKSEG_LABELING_HPP
#define TRACKSEG_LABELING_HPP

#include <cstdint>

#include "trackseg/image.hpp"

namespace trackseg {

/// Integer raster used as labeling input where values may exceed the
/// int32 label range (e.g. accumulated segmentations).
using ValueRaster = Image<std::int64_t, struct ValueTag>;

/// 8-connected components of the foreground. Labels are {1..N}, assigned
/// in raster-scan order of each component's first-encountered pixel.
LabelImage label_binary(const BinaryImage& bin);

/// Two nonzero pixels share a label iff they are 8-connected through
/// pixels of the same value. Zero stays background. Labels {1..N} in
/// scan order, as in label_binary.
LabelImage label_equal_values(const ValueRaster& values);
LabelImage label_equal_values(const LabelImage& values);

}  // namespace trackseg

#endif  // TRACKSEG_LABELING_HPP
