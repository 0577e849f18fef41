#pragma once

// Early function point estimation: predict total unadjusted FP from
// whichever of the early counters (CILF, CILFEIF, CEIEOEQ) is known.

#include <optional>
#include <span>
#include <vector>

#include "efpm/dataset.hpp"
#include "efpm/regress.hpp"

namespace efpm {

/// One regression model per early counter.
struct CalibratedModelSet {
  LinearModel cilf;
  LinearModel cilfeif;
  LinearModel ceieoeq;

  const LinearModel& model(Predictor p) const noexcept;
};

/// The published calibration: FP = 130.327 + 15.902 CILF,
/// FP = 66.905 + 13.035 CILFEIF, FP = 50.784 + 6.289 CEIEOEQ, with their
/// printed R, R squared and standard errors. The printed tables omit the
/// predictor mean and spread, so n, x_mean, y_mean and sxx come from a
/// refit of the embedded dataset.
const CalibratedModelSet& paper_models();

/// Fits all three models to `ds` (FP against each counter).
CalibratedModelSet fit_models(const Dataset& ds);

struct EstimationInput {
  std::optional<int> cilf;
  std::optional<int> cilfeif;
  std::optional<int> ceieoeq;
};

/// Throws ValidationError when no counter is given, a counter is negative,
/// or cilfeif < cilf.
void validate(const EstimationInput& input);

struct PredictionInterval {
  double low = 0.0;
  double high = 0.0;
  double level = 0.0;
};

struct Estimate {
  double predicted_fp = 0.0;
  Predictor model_used = Predictor::CILF;
  double r2 = 0.0;
  std::optional<PredictionInterval> interval;
};

/// One estimate per counter present, best model first: descending r2, ties
/// broken CEIEOEQ, then CILFEIF, then CILF. With `level` set, each estimate
/// carries a prediction interval at that confidence.
std::vector<Estimate> estimate(const EstimationInput& input, const CalibratedModelSet& models,
                               std::optional<double> level = std::nullopt);

/// Highest r2 under the same tie rule. Throws ValidationError when empty.
Estimate best_estimate(std::span<const Estimate> estimates);

/// predict(x) -/+ t * se_est * sqrt(1 + 1/n + (x - x_mean)^2 / sxx), with t
/// the (1 + level) / 2 quantile on n - 2 degrees of freedom. Collapses to a
/// point for a model with zero residual error.
PredictionInterval prediction_interval(const LinearModel& model, double x, double level);

}  // namespace efpm
