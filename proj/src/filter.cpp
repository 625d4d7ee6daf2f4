// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratrack/filter.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "ratrack/motion.hpp"

namespace ratrack {
namespace {

using Gain = Eigen::Matrix<double, 2, Eigen::Dynamic>;

// K = P H^T S^-1, after checking S is well conditioned.
Gain kalman_gain(const Mat2& prior, const ObservationModel& obs) {
  if (obs.H.rows() != obs.noise_var.size()) {
    throw std::invalid_argument("observation model: H/R size mismatch");
  }
  const Eigen::MatrixXd PHt = prior * obs.H.transpose();
  Eigen::MatrixXd S = obs.H * PHt;
  S.diagonal() += obs.noise_var;

  double lo = 0.0;
  double hi = 0.0;
  if (S.rows() == 1) {
    lo = hi = S(0, 0);
  } else if (S.rows() == 2) {
    const Eigen::Vector2d ev = sym_eigenvalues(S.topLeftCorner<2, 2>());
    lo = ev(0);
    hi = ev(1);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    lo = es.eigenvalues().minCoeff();
    hi = es.eigenvalues().maxCoeff();
  }
  if (!(lo > 0.0) || hi / lo > kMaxInnovationCondition) {
    throw FilterDegenerateError("innovation covariance is numerically singular");
  }
  // S is symmetric PD, so K^T = S^-1 (H P).
  return S.llt().solve(PHt.transpose()).transpose();
}

Mat2 joseph(const Mat2& prior, const ObservationModel& obs, const Gain& K) {
  const Mat2 IKH = Mat2::Identity() - K * obs.H;
  const Mat2 post = IKH * prior * IKH.transpose() +
                    K * obs.noise_var.asDiagonal() * K.transpose();
  return symmetrize(post);
}

}  // namespace

TargetBelief predict(const TargetBelief& b, const TargetTruth& motion, double dt) {
  TargetTruth at_mean = motion;
  at_mean.pos = b.mean;
  TargetBelief out = b;
  out.mean = target_mean_step(at_mean, dt);
  out.cov = symmetrize(b.cov + motion.sigma * motion.sigma * Mat2::Identity());
  return out;
}

Mat2 posterior_covariance(const Mat2& prior, const ObservationModel& obs) {
  return joseph(prior, obs, kalman_gain(prior, obs));
}

TargetBelief update(const TargetBelief& b, const ObservationModel& obs,
                    const Eigen::VectorXd& z, const Eigen::VectorXd& z_pred) {
  if (z.size() != obs.rows() || z_pred.size() != obs.rows()) {
    throw std::invalid_argument("update: measurement size mismatch");
  }
  const Gain K = kalman_gain(b.cov, obs);
  Eigen::VectorXd innovation = z - z_pred;
  for (int i = 0; i < obs.rows(); ++i) {
    if (obs.channels.at(i) == Channel::kBearing) {
      innovation(i) = wrap_angle(innovation(i));
    }
  }
  TargetBelief out = b;
  out.mean = b.mean + K * innovation;
  out.cov = joseph(b.cov, obs, K);
  return out;
}

double metric_value(const Mat2& cov, QualityMetric metric) {
  switch (metric) {
    case QualityMetric::kTraceReduction:
      return cov.trace();
    case QualityMetric::kLogDetReduction: {
      const double det = cov.determinant();
      if (!(det > 0.0)) {
        throw FilterDegenerateError("log-det of a singular covariance");
      }
      return std::log(det);
    }
    case QualityMetric::kMaxEigReduction:
      return sym_eigenvalues(cov)(1);
  }
  return 0.0;
}

double quality(const TargetBelief& prior, const ObservationModel& obs,
               QualityMetric metric) {
  const Mat2 post = posterior_covariance(prior.cov, obs);
  return metric_value(prior.cov, metric) - metric_value(post, metric);
}

}  // namespace ratrack
