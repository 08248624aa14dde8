#include "curvrad/sampled_curve.hpp"

#include "curvrad/errors.hpp"
#include "curvrad/finite_difference.hpp"

namespace curvrad {
namespace {

void check_times(const std::vector<double>& times, const Mat& points) {
  if (static_cast<Eigen::Index>(times.size()) != points.rows())
    fail(ErrorKind::InvalidArgument, "curve has " + std::to_string(times.size()) + " times but " +
                                         std::to_string(points.rows()) + " points");
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    if (!(times[k + 1] > times[k]))
      fail(ErrorKind::InvalidArgument, "curve times must be strictly increasing", k + 1);
  }
  if (!points.allFinite()) fail(ErrorKind::NonFinite, "curve contains non-finite coordinates");
}

}  // namespace

SampledCurve::SampledCurve(std::vector<double> times, Mat points, int derivative_order)
    : times_(std::move(times)), points_(std::move(points)), order_(derivative_order) {
  check_times(times_, points_);
  auto d = differentiate(times_, points_, order_);
  velocities_ = std::move(d.first);
  accelerations_ = std::move(d.second);
}

SampledCurve::SampledCurve(std::vector<double> times, Mat points, Mat velocities,
                           Mat accelerations)
    : times_(std::move(times)),
      points_(std::move(points)),
      velocities_(std::move(velocities)),
      accelerations_(std::move(accelerations)),
      order_(0) {
  check_times(times_, points_);
  if (velocities_.rows() != points_.rows() || velocities_.cols() != points_.cols() ||
      accelerations_.rows() != points_.rows() || accelerations_.cols() != points_.cols())
    fail(ErrorKind::InvalidArgument, "derivative arrays must match the point array shape");
}

void SampledCurve::check_domain(const MetricModel& model) const {
  if (dim() != model.dim())
    fail(ErrorKind::InvalidArgument, "curve dimension " + std::to_string(dim()) +
                                         " does not match model " + model.name());
  for (int k = 0; k < size(); ++k) {
    if (!model.in_domain(point(k)))
      fail(ErrorKind::Domain, "curve sample outside the chart of " + model.name(),
           static_cast<std::size_t>(k));
  }
}

}  // namespace curvrad
