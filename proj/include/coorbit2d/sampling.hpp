#pragma once

#include <cstddef>
#include <vector>

#include "coorbit2d/group_model.hpp"

namespace coorbit2d {

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 1;

  double step() const { return (max - min) / static_cast<double>(count); }
};

/// Uniform chart grids. Log-scales and shears use cell midpoints; angles use
/// the periodic grid min + k * step.
struct SamplingConfig {
  AxisRange log_scale{-2.0, 2.0, 32};
  AxisRange log_scale2{-2.0, 2.0, 32};  // second diagonal scale
  AxisRange angle{0.0, 6.283185307179586, 32};
  AxisRange shear{-6.0, 6.0, 64};
};

SamplingConfig default_sampling_config(FamilyKind kind);

struct SampledPoint {
  ChartPoint point;
  Mat2 standard;      // element of the unconjugated family
  double volume = 0;  // chart cell volume
  double haar = 0;    // haar_weight * volume
  double g = 0;       // g_weight * volume
};

struct GroupSampling {
  Family family;
  std::vector<SampledPoint> points;

  std::size_t size() const { return points.size(); }
};

GroupSampling make_sampling(const GroupSpec& spec, const SamplingConfig& config);
/// Sampling holding a single chart point with unit volume.
GroupSampling single_point_sampling(const GroupSpec& spec, const ChartPoint& p);

}  // namespace coorbit2d
