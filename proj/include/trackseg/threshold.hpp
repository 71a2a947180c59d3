#ifndef TRACKSEG_THRESHOLD_HPP
#define TRACKSEG_THRESHOLD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "trackseg/image.hpp"

namespace trackseg {

/// Thrown when a histogram has a single occupied bin, so no threshold
/// can split it into two classes.
class DegenerateHistogram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 256-bin intensity histogram. Sum of counts equals the pixel count
/// of the source image.
struct Histogram {
  std::array<std::int64_t, 256> counts{};

  static Histogram of(const GrayImage& img);

  std::int64_t total() const noexcept;
  int min_intensity() const noexcept;  // -1 when empty
  int max_intensity() const noexcept;
  int distinct_values() const noexcept;
};

/// ISODATA (Ridler-Calvard) threshold: the intensity halfway between the
/// mean of the pixels at or below it and the mean of those above it.
/// Starts from the global mean and iterates until stable; when several
/// intensities meet the halfway criterion the smallest one is returned,
/// so the result is deterministic.
///
/// Throws DegenerateHistogram for constant images.
int isodata_threshold(const Histogram& hist);
int isodata_threshold(const GrayImage& img);

/// Splits at t: with roi_is_dark the foreground is intensity <= t,
/// otherwise intensity > t. Requires 0 <= t <= 255.
BinaryImage binarize(const GrayImage& img, int threshold, bool roi_is_dark);

}  // namespace trackseg

#endif  // TRACKSEG_THRESHOLD_HPP
