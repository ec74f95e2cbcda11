// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

namespace wavecp {

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student-t statistic with nu degrees of freedom,
/// I_{nu/(nu+t^2)}(nu/2, 1/2), floored at 1e-300.
double student_t_two_sided_p(double t, double nu);

}  // namespace wavecp
