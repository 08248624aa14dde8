#pragma once

#include <vector>

#include "curvrad/metric_model.hpp"
#include "curvrad/types.hpp"

namespace curvrad {

// A curve sampled at strictly increasing times, with velocities and
// accelerations either supplied analytically or computed by finite
// differences (see differentiate()).
class SampledCurve {
 public:
  SampledCurve(std::vector<double> times, Mat points, int derivative_order = 4);
  // Analytic derivatives; no stencils are evaluated.
  SampledCurve(std::vector<double> times, Mat points, Mat velocities, Mat accelerations);

  int size() const { return static_cast<int>(times_.size()); }
  int dim() const { return static_cast<int>(points_.cols()); }
  int derivative_order() const { return order_; }
  bool analytic_derivatives() const { return order_ == 0; }

  const std::vector<double>& times() const { return times_; }
  const Mat& points() const { return points_; }
  const Mat& velocities() const { return velocities_; }
  const Mat& accelerations() const { return accelerations_; }

  Vec point(int k) const { return points_.row(k).transpose(); }
  Vec velocity(int k) const { return velocities_.row(k).transpose(); }
  Vec acceleration(int k) const { return accelerations_.row(k).transpose(); }

  // Throws Error(Domain) with the first offending sample index.
  void check_domain(const MetricModel& model) const;

 private:
  std::vector<double> times_;
  Mat points_;
  Mat velocities_;
  Mat accelerations_;
  int order_;
};

}  // namespace curvrad
