#include "efpm/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efpm/error.hpp"
#include "efpm/student_t.hpp"

namespace efpm {

namespace {

struct PrintedModel {
  double intercept, se_intercept, t_intercept;
  double slope, se_slope, beta, t_slope;
  double r, r2, r2_adj, se_est;
};

constexpr PrintedModel kPrintedCilf{130.327, 15.755, 8.272, 15.902, 1.307, 0.848, 12.162,
                                    0.848, 0.718, 0.713, 69.0822};
constexpr PrintedModel kPrintedCilfeif{66.905, 22.156, 3.020, 13.035, 1.178, 0.824, 11.067,
                                       0.824, 0.679, 0.673, 73.7912};
constexpr PrintedModel kPrintedCeieoeq{50.784, 13.521, 3.756, 6.289, 0.320, 0.932, 19.658,
                                       0.932, 0.869, 0.867, 47.0237};

LinearModel calibrated(const PrintedModel& p, const LinearModel& refit) {
  LinearModel m;
  m.predictor_name = refit.predictor_name;
  m.response_name = refit.response_name;
  m.n = refit.n;
  m.x_mean = refit.x_mean;
  m.y_mean = refit.y_mean;
  m.sxx = refit.sxx;
  m.intercept = p.intercept;
  m.se_intercept = p.se_intercept;
  m.t_intercept = p.t_intercept;
  m.slope = p.slope;
  m.se_slope = p.se_slope;
  m.beta_std = p.beta;
  m.t_slope = p.t_slope;
  m.r = p.r;
  m.r2 = p.r2;
  m.r2_adj = p.r2_adj;
  m.se_est = p.se_est;
  m.p_intercept = student_t_two_tailed_p(p.t_intercept, m.n - 2);
  m.p_slope = student_t_two_tailed_p(p.t_slope, m.n - 2);
  return m;
}

// Lower rank wins ties.
int tie_rank(Predictor p) {
  switch (p) {
    case Predictor::CEIEOEQ: return 0;
    case Predictor::CILFEIF: return 1;
    case Predictor::CILF: return 2;
  }
  return 3;
}

bool better(const Estimate& a, const Estimate& b) {
  if (a.r2 != b.r2) return a.r2 > b.r2;
  return tie_rank(a.model_used) < tie_rank(b.model_used);
}

}  // namespace

const LinearModel& CalibratedModelSet::model(Predictor p) const noexcept {
  switch (p) {
    case Predictor::CILF: return cilf;
    case Predictor::CILFEIF: return cilfeif;
    case Predictor::CEIEOEQ: return ceieoeq;
  }
  return cilf;
}

CalibratedModelSet fit_models(const Dataset& ds) {
  auto fit = [&](Predictor p) {
    const auto pts = ds.points(p);
    return fit_simple_ols(pts, std::string(to_string(p)), "FP");
  };
  return {fit(Predictor::CILF), fit(Predictor::CILFEIF), fit(Predictor::CEIEOEQ)};
}

const CalibratedModelSet& paper_models() {
  static const CalibratedModelSet models = [] {
    const CalibratedModelSet refit = fit_models(embedded_dataset());
    return CalibratedModelSet{calibrated(kPrintedCilf, refit.cilf),
                              calibrated(kPrintedCilfeif, refit.cilfeif),
                              calibrated(kPrintedCeieoeq, refit.ceieoeq)};
  }();
  return models;
}

void validate(const EstimationInput& input) {
  if (!input.cilf && !input.cilfeif && !input.ceieoeq) {
    throw ValidationError("input", "at least one of cilf, cilfeif, ceieoeq is required");
  }
  if (input.cilf && *input.cilf < 0) throw ValidationError("cilf", "cilf must be non-negative");
  if (input.cilfeif && *input.cilfeif < 0) {
    throw ValidationError("cilfeif", "cilfeif must be non-negative");
  }
  if (input.ceieoeq && *input.ceieoeq < 0) {
    throw ValidationError("ceieoeq", "ceieoeq must be non-negative");
  }
  if (input.cilf && input.cilfeif && *input.cilfeif < *input.cilf) {
    throw ValidationError("cilfeif", "cilfeif < cilf");
  }
}

std::vector<Estimate> estimate(const EstimationInput& input, const CalibratedModelSet& models,
                               std::optional<double> level) {
  validate(input);
  std::vector<Estimate> out;
  auto add = [&](Predictor p, const std::optional<int>& counter) {
    if (!counter) return;
    const LinearModel& m = models.model(p);
    const double x = *counter;
    Estimate e{predict(m, x), p, m.r2, std::nullopt};
    if (level) e.interval = prediction_interval(m, x, *level);
    out.push_back(e);
  };
  add(Predictor::CILF, input.cilf);
  add(Predictor::CILFEIF, input.cilfeif);
  add(Predictor::CEIEOEQ, input.ceieoeq);
  std::stable_sort(out.begin(), out.end(), better);
  return out;
}

Estimate best_estimate(std::span<const Estimate> estimates) {
  if (estimates.empty()) throw ValidationError("estimates", "no estimates to choose from");
  return *std::min_element(estimates.begin(), estimates.end(), better);
}

PredictionInterval prediction_interval(const LinearModel& model, double x, double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw ValidationError("level", "confidence level must lie in (0, 1)");
  }
  if (model.n < 3 || !(model.sxx > 0.0)) {
    throw ValidationError("model", "model lacks the fit geometry needed for an interval");
  }
  const double centre = predict(model, x);
  if (model.degenerate || model.se_est == 0.0) return {centre, centre, level};
  const double n = model.n;
  const double dx = x - model.x_mean;
  const double t = student_t_quantile((1.0 + level) / 2.0, model.n - 2);
  const double half = t * model.se_est * std::sqrt(1.0 + 1.0 / n + dx * dx / model.sxx);
  return {centre - half, centre + half, level};
}

}  // namespace efpm
