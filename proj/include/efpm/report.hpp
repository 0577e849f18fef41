#pragma once

#include <span>
#include <string>
#include <vector>

#include "efpm/point.hpp"
#include "efpm/regress.hpp"

namespace efpm {

struct PlotSpec {
  std::vector<Point> points;
  LinearModel model;
  std::string x_label;
  std::string y_label;
  std::string title;
  int width = 640;
  int height = 480;
};

/// Scatter of `points` with the model's line drawn across [x_min, x_max].
/// Deterministic SVG 1.1. One `<circle class="point">` per point; the
/// `<line class="fit">` element also carries its endpoints in data
/// coordinates as data-x1/data-y1/data-x2/data-y2.
///
/// Throws ValidationError for fewer than 2 points, empty labels,
/// non-positive size, or all x equal.
std::string scatter_svg(const PlotSpec& spec);

/// Tab-separated `x y fitted residual` with a header row.
std::string data_table(std::span<const Point> points, const LinearModel& model);

}  // namespace efpm
