#pragma once

#include <Eigen/Dense>

namespace curvrad {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Christoffel symbols Γ^μ_{αβ} of a chart, stored densely as [μ][α][β].
class ChristoffelSymbols {
 public:
  ChristoffelSymbols() = default;
  explicit ChristoffelSymbols(int dim) : dim_(dim), data_(Vec::Zero(dim * dim * dim)) {}

  int dim() const { return dim_; }

  double& operator()(int mu, int a, int b) { return data_[(mu * dim_ + a) * dim_ + b]; }
  double operator()(int mu, int a, int b) const { return data_[(mu * dim_ + a) * dim_ + b]; }

  // Γ(X,Y)^μ = Σ Γ^μ_{αβ} X^α Y^β
  Vec contract(const Vec& X, const Vec& Y) const {
    Vec out = Vec::Zero(dim_);
    for (int mu = 0; mu < dim_; ++mu) {
      double acc = 0.0;
      for (int a = 0; a < dim_; ++a) {
        for (int b = 0; b < dim_; ++b) acc += (*this)(mu, a, b) * X[a] * Y[b];
      }
      out[mu] = acc;
    }
    return out;
  }

  const Vec& raw() const { return data_; }
  Vec& raw() { return data_; }

 private:
  int dim_ = 0;
  Vec data_;
};

}  // namespace curvrad
