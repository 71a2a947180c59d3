#ifndef TRACKSEG_FEATURES_HPP
#define TRACKSEG_FEATURES_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "trackseg/image.hpp"

namespace trackseg {

/// Per-region shape and intensity measurements.
///
/// Diameters are the axis lengths of the ellipse with the same second
/// central moments as the region (4*sqrt of the covariance eigenvalues),
/// floored at 1 px so a single pixel reads as a 1x1 square. Eccentricity
/// derives from the stored diameters, sqrt(1 - (d_minor/d_major)^2), so
/// it is 0 for a circle and approaches 1 for a line.
struct RegionFeature {
  int id = 0;
  std::int64_t area = 0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  double eccentricity = 0.0;
  double major_diameter = 0.0;
  double minor_diameter = 0.0;
  double mean_gray = 0.0;
};

/// Measures every region of a {1..N}-labeled image against the matching
/// photomicrograph. Ordered by id.
std::vector<RegionFeature> region_properties(const LabelImage& labels,
                                             const GrayImage& gray);

/// Keeps regions with eccentricity <= eps_max (order preserved).
/// Requires 0 <= eps_max < 1.
std::vector<RegionFeature> filter_eccentricity(
    const std::vector<RegionFeature>& feats, double eps_max);

class NoAcceptedRegions : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-sample aggregates pooled over all regions of all images.
struct SampleAggregate {
  std::string sample_id;
  double mean_diameter_product = 0.0;  // mean of d_major*d_minor, px^2
  double mean_gray_level = 0.0;
  std::int64_t n_regions = 0;
};

/// Pools every region of every image of a sample. Throws
/// NoAcceptedRegions when the sample has none.
SampleAggregate sample_aggregate(
    const std::vector<std::vector<RegionFeature>>& feats_per_image,
    const std::string& sample_id);

/// Feature table for one image (rows carry the image name so tables can
/// be concatenated).
struct ImageFeatures {
  std::string image;
  std::vector<RegionFeature> regions;
};

/// CSV with header image,id,area,centroid_x,centroid_y,eccentricity,
/// d_major,d_minor,mean_gray; rows ordered by (image, id); byte output
/// deterministic.
void write_features_csv(const std::vector<ImageFeatures>& tables,
                        const std::filesystem::path& path);

}  // namespace trackseg

#endif  // TRACKSEG_FEATURES_HPP
