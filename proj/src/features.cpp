#include "trackseg/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace trackseg {

std::vector<RegionFeature> region_properties(const LabelImage& labels,
                                             const GrayImage& gray) {
  require_same_size(labels, gray, "region_properties");

  std::int32_t top = 0;
  for (auto v : labels.pixels()) top = std::max(top, v);

  struct Acc {
    std::int64_t n = 0;
    std::int64_t sx = 0, sy = 0;
    std::int64_t sxx = 0, syy = 0, sxy = 0;
    std::int64_t sgray = 0;
  };
  std::vector<Acc> acc(static_cast<std::size_t>(top) + 1);

  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const std::int32_t v = labels(x, y);
      if (v <= 0) continue;
      Acc& a = acc[v];
      ++a.n;
      a.sx += x;
      a.sy += y;
      a.sxx += static_cast<std::int64_t>(x) * x;
      a.syy += static_cast<std::int64_t>(y) * y;
      a.sxy += static_cast<std::int64_t>(x) * y;
      a.sgray += gray(x, y);
    }
  }
  for (std::int32_t l = 1; l <= top; ++l)
    if (!acc[l].n)
      throw std::invalid_argument(
          "region_properties: labels must be exactly {1..N}");

  std::vector<RegionFeature> out;
  out.reserve(top);
  for (std::int32_t l = 1; l <= top; ++l) {
    const Acc& a = acc[l];
    const double n = static_cast<double>(a.n);
    const double cx = a.sx / n;
    const double cy = a.sy / n;
    // Covariance of member pixel coordinates.
    const double cxx = a.sxx / n - cx * cx;
    const double cyy = a.syy / n - cy * cy;
    const double cxy = a.sxy / n - cx * cy;
    const double mean_lv = 0.5 * (cxx + cyy);
    const double gap =
        std::sqrt(std::max(0.0, 0.25 * (cxx - cyy) * (cxx - cyy) + cxy * cxy));
    const double l1 = mean_lv + gap;
    const double l2 = std::max(0.0, mean_lv - gap);

    RegionFeature f;
    f.id = l;
    f.area = a.n;
    f.centroid_x = cx;
    f.centroid_y = cy;
    f.major_diameter = std::max(4.0 * std::sqrt(l1), 1.0);
    f.minor_diameter = std::max(4.0 * std::sqrt(l2), 1.0);
    const double ratio = f.minor_diameter / f.major_diameter;
    f.eccentricity = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    f.mean_gray = a.sgray / n;
    out.push_back(f);
  }
  return out;
}

std::vector<RegionFeature> filter_eccentricity(
    const std::vector<RegionFeature>& feats, double eps_max) {
  if (!(eps_max >= 0.0 && eps_max < 1.0))
    throw std::invalid_argument(
        "filter_eccentricity: eps_max must be in [0, 1)");
  std::vector<RegionFeature> out;
  for (const auto& f : feats)
    if (f.eccentricity <= eps_max) out.push_back(f);
  return out;
}

SampleAggregate sample_aggregate(
    const std::vector<std::vector<RegionFeature>>& feats_per_image,
    const std::string& sample_id) {
  SampleAggregate agg;
  agg.sample_id = sample_id;
  double sum_dp = 0.0, sum_gray = 0.0;
  for (const auto& regions : feats_per_image) {
    for (const auto& f : regions) {
      sum_dp += f.major_diameter * f.minor_diameter;
      sum_gray += f.mean_gray;
      ++agg.n_regions;
    }
  }
  if (agg.n_regions == 0)
    throw NoAcceptedRegions("sample_aggregate: no accepted regions in sample " +
                            sample_id);
  agg.mean_diameter_product = sum_dp / static_cast<double>(agg.n_regions);
  agg.mean_gray_level = sum_gray / static_cast<double>(agg.n_regions);
  return agg;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void write_features_csv(const std::vector<ImageFeatures>& tables,
                        const std::filesystem::path& path) {
  std::vector<const ImageFeatures*> order;
  order.reserve(tables.size());
  for (const auto& t : tables) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const ImageFeatures* a, const ImageFeatures* b) {
                     return a->image < b->image;
                   });

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("write_features_csv: cannot create " +
                             path.string());
  out << "image,id,area,centroid_x,centroid_y,eccentricity,d_major,d_minor,"
         "mean_gray\n";
  for (const auto* t : order) {
    for (const auto& f : t->regions) {
      out << t->image << ',' << f.id << ',' << f.area << ','
          << fmt_double(f.centroid_x) << ',' << fmt_double(f.centroid_y) << ','
          << fmt_double(f.eccentricity) << ',' << fmt_double(f.major_diameter)
          << ',' << fmt_double(f.minor_diameter) << ','
          << fmt_double(f.mean_gray) << '\n';
    }
  }
  if (!out)
    throw std::runtime_error("write_features_csv: write failed: " +
                             path.string());
}

}  // namespace trackseg
