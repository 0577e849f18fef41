#include "efpm/regress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "efpm/error.hpp"
#include "efpm/format.hpp"
#include "efpm/student_t.hpp"

namespace efpm {

LinearModel fit_simple_ols(std::span<const Point> points, std::string predictor_name,
                           std::string response_name) {
  const std::size_t count = points.size();
  if (count < 3) {
    throw InsufficientDataError("points", "simple regression needs at least 3 points, got " +
                                              std::to_string(count));
  }
  const double n = static_cast<double>(count);

  double x_sum = 0.0;
  double y_sum = 0.0;
  for (const auto& p : points) {
    x_sum += p.x;
    y_sum += p.y;
  }
  const double x_mean = x_sum / n;
  const double y_mean = y_sum / n;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - x_mean;
    const double dy = p.y - y_mean;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0)) throw DegeneratePredictorError("x", "predictor is constant");

  LinearModel m;
  m.predictor_name = std::move(predictor_name);
  m.response_name = std::move(response_name);
  m.n = static_cast<int>(count);
  m.x_mean = x_mean;
  m.y_mean = y_mean;
  m.sxx = sxx;
  m.slope = sxy / sxx;
  m.intercept = y_mean - m.slope * x_mean;

  double sse = 0.0;
  for (const auto& p : points) {
    const double e = p.y - (m.intercept + m.slope * p.x);
    sse += e * e;
  }
  const double df = n - 2.0;
  m.se_est = std::sqrt(sse / df);
  m.se_slope = m.se_est / std::sqrt(sxx);
  m.se_intercept = m.se_est * std::sqrt(1.0 / n + x_mean * x_mean / sxx);

  if (syy == 0.0) {
    m.degenerate = true;
    m.slope = 0.0;
    m.intercept = y_mean;
    m.se_est = m.se_slope = m.se_intercept = 0.0;
    m.r = m.r2 = m.beta_std = 0.0;
    m.r2_adj = 1.0 - (n - 1.0) / df;
    m.t_intercept = m.t_slope = std::numeric_limits<double>::quiet_NaN();
    m.p_intercept = m.p_slope = std::numeric_limits<double>::quiet_NaN();
    return m;
  }

  m.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  m.r2 = m.r * m.r;
  m.r2_adj = 1.0 - (1.0 - m.r2) * (n - 1.0) / df;
  m.beta_std = m.slope * std::sqrt(sxx / syy);
  // A perfect fit gives infinite t statistics and zero p-values.
  m.t_intercept = m.intercept / m.se_intercept;
  m.t_slope = m.slope / m.se_slope;
  if (m.se_est == 0.0 && m.intercept == 0.0) m.t_intercept = 0.0;
  m.p_intercept = student_t_two_tailed_p(m.t_intercept, m.n - 2);
  m.p_slope = student_t_two_tailed_p(m.t_slope, m.n - 2);
  return m;
}

double predict(const LinearModel& model, double x) noexcept {
  return model.intercept + model.slope * x;
}

std::vector<double> residuals(const LinearModel& model, std::span<const Point> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.y - predict(model, p.x));
  return out;
}

std::string model_summary(const LinearModel& m) {
  auto f3 = [](double v) { return format_fixed(v, 3); };
  std::string out;
  out += "Summary of the model\n";
  out += "Model\tR\tR squared\tR squared corrected\tTypical error of the estimation\n";
  out += "1\t" + f3(m.r) + "\t" + f3(m.r2) + "\t" + f3(m.r2_adj) + "\t" +
         format_fixed(m.se_est, 4) + "\n";
  out += "Predictors: (Constant), " + m.predictor_name + "\n";
  out += "\n";
  out += "Coefficients\n";
  out += "Model\tTerm\tB\tTypical error\tBeta\tt\tSig.\n";
  out += "1\t(Constant)\t" + f3(m.intercept) + "\t" + f3(m.se_intercept) + "\t\t" +
         f3(m.t_intercept) + "\t" + f3(m.p_intercept) + "\n";
  out += "1\t" + m.predictor_name + "\t" + f3(m.slope) + "\t" + f3(m.se_slope) + "\t" +
         f3(m.beta_std) + "\t" + f3(m.t_slope) + "\t" + f3(m.p_slope) + "\n";
  out += "Dependent variable: " + m.response_name + "\n";
  return out;
}

}  // namespace efpm
