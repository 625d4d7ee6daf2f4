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

// Per-target extended Kalman filter and the tracking-quality functional.
//
// Targets are filtered independently; the motion Jacobian is the identity
// because the circular displacement does not depend on position. The
// covariance update uses the Joseph form so it stays symmetric PSD even
// when R is tiny.

#ifndef RATRACK_FILTER_HPP_
#define RATRACK_FILTER_HPP_

#include <Eigen/Core>

#include "ratrack/core.hpp"
#include "ratrack/sensing.hpp"

namespace ratrack {

enum class QualityMetric { kTraceReduction, kLogDetReduction, kMaxEigReduction };

// S with condition number above this is rejected by update().
inline constexpr double kMaxInnovationCondition = 1e12;

// Prediction with the target's known motion parameters (v, omega, phase,
// sigma). Q = sigma^2 I.
TargetBelief predict(const TargetBelief& b, const TargetTruth& motion, double dt);

// Joseph-form posterior covariance. Independent of the measurement value.
Mat2 posterior_covariance(const Mat2& prior, const ObservationModel& obs);

// Full EKF update. Bearing innovations are wrapped into (-pi, pi].
TargetBelief update(const TargetBelief& b, const ObservationModel& obs,
                    const Eigen::VectorXd& z, const Eigen::VectorXd& z_pred);

double metric_value(const Mat2& cov, QualityMetric metric);

// metric(prior) - metric(posterior) for the covariance the update would give.
double quality(const TargetBelief& prior, const ObservationModel& obs,
               QualityMetric metric = QualityMetric::kTraceReduction);

}  // namespace ratrack

#endif  // RATRACK_FILTER_HPP_
