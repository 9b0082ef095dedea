#include "coorbit2d/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

void check_axis(const AxisRange& a, const char* name) {
  if (a.count == 0 || !std::isfinite(a.min) || !std::isfinite(a.max) || !(a.max > a.min)) {
    throw Error(ErrorKind::out_of_range, std::string("invalid sampling range for ") + name);
  }
}

double midpoint(const AxisRange& a, std::size_t k) { return a.min + (static_cast<double>(k) + 0.5) * a.step(); }
double periodic(const AxisRange& a, std::size_t k) { return a.min + static_cast<double>(k) * a.step(); }

void push(GroupSampling& s, const GroupSpec& spec, const ChartPoint& p, double volume) {
  SampledPoint sp;
  sp.point = p;
  sp.standard = standard_element(spec.family(), p);
  sp.volume = volume;
  sp.haar = haar_weight(spec, p) * volume;
  sp.g = g_weight(spec, p) * volume;
  s.points.push_back(sp);
}

}  // namespace

SamplingConfig default_sampling_config(FamilyKind) { return SamplingConfig{}; }

GroupSampling make_sampling(const GroupSpec& spec, const SamplingConfig& config) {
  GroupSampling s{spec.family(), {}};
  switch (spec.kind()) {
    case FamilyKind::similitude: {
      check_axis(config.log_scale, "log scale");
      check_axis(config.angle, "angle");
      const double vol = config.log_scale.step() * config.angle.step();
      for (std::size_t a = 0; a < config.log_scale.count; ++a) {
        for (std::size_t b = 0; b < config.angle.count; ++b) {
          push(s, spec, SimilitudeChart{midpoint(config.log_scale, a), periodic(config.angle, b)}, vol);
        }
      }
      break;
    }
    case FamilyKind::diagonal: {
      check_axis(config.log_scale, "log scale");
      check_axis(config.log_scale2, "second log scale");
      const double vol = config.log_scale.step() * config.log_scale2.step();
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          for (std::size_t a = 0; a < config.log_scale.count; ++a) {
            for (std::size_t b = 0; b < config.log_scale2.count; ++b) {
              push(s, spec, DiagonalChart{midpoint(config.log_scale, a), midpoint(config.log_scale2, b), s1, s2},
                   vol);
            }
          }
        }
      }
      break;
    }
    case FamilyKind::shearlet: {
      check_axis(config.log_scale, "log scale");
      check_axis(config.shear, "shear");
      const double vol = config.log_scale.step() * config.shear.step();
      for (int e : {1, -1}) {
        for (std::size_t a = 0; a < config.log_scale.count; ++a) {
          for (std::size_t b = 0; b < config.shear.count; ++b) {
            push(s, spec, ShearletChart{e, midpoint(config.log_scale, a), midpoint(config.shear, b)}, vol);
          }
        }
      }
      break;
    }
  }
  return s;
}

GroupSampling single_point_sampling(const GroupSpec& spec, const ChartPoint& p) {
  GroupSampling s{spec.family(), {}};
  push(s, spec, p, 1.0);
  return s;
}

}  // namespace coorbit2d
