#pragma once

// Simple ordinary least squares with the diagnostics of a statistics
// package "model summary" and "coefficients" table pair.

#include <span>
#include <string>
#include <vector>

#include "efpm/point.hpp"

namespace efpm {

struct LinearModel {
  std::string predictor_name = "x";
  std::string response_name = "y";

  int n = 0;
  double intercept = 0.0;
  double slope = 0.0;
  double se_intercept = 0.0;
  double se_slope = 0.0;
  double r = 0.0;
  double r2 = 0.0;
  double r2_adj = 0.0;
  double se_est = 0.0;  // standard error of the estimate
  double beta_std = 0.0;
  double t_intercept = 0.0;
  double t_slope = 0.0;
  double p_intercept = 1.0;  // two-tailed, n - 2 degrees of freedom
  double p_slope = 1.0;

  // Fit geometry, needed for prediction intervals.
  double x_mean = 0.0;
  double y_mean = 0.0;
  double sxx = 0.0;

  // Set when every y is equal: slope 0, r 0, se_est 0, t and p undefined.
  bool degenerate = false;
};

/// Throws InsufficientDataError for fewer than 3 points and
/// DegeneratePredictorError when every x is equal.
LinearModel fit_simple_ols(std::span<const Point> points, std::string predictor_name = "x",
                           std::string response_name = "y");

double predict(const LinearModel& model, double x) noexcept;

/// y - predict(x) for each point, in input order.
std::vector<double> residuals(const LinearModel& model, std::span<const Point> points);

/// Two tab-separated tables: the model summary (R, R squared, R squared
/// corrected, typical error of the estimation) and the coefficients
/// (B, typical error, Beta, t, Sig.). Three decimals throughout except the
/// typical error of the estimation, which has four.
std::string model_summary(const LinearModel& model);

}  // namespace efpm
