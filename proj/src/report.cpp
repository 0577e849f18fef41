#include "efpm/report.hpp"

#include <algorithm>
#include <cmath>

#include "efpm/error.hpp"
#include "efpm/format.hpp"

namespace efpm {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;
constexpr int kTargetTicks = 5;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(double v) { return format_fixed(v, 2); }

// 1, 2 or 5 times a power of ten.
double nice_step(double span) {
  const double raw = span / kTargetTicks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  const double nice = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
  return nice * mag;
}

struct Axis {
  double lo;
  double hi;
  double step;
  int decimals;

  static Axis covering(double min, double max) {
    if (max == min) {
      const double pad = min == 0.0 ? 1.0 : std::fabs(min) * 0.1;
      min -= pad;
      max += pad;
    }
    const double step = nice_step(max - min);
    return {std::floor(min / step) * step, std::ceil(max / step) * step, step,
            std::max(0, static_cast<int>(-std::floor(std::log10(step))))};
  }

  int tick_count() const { return static_cast<int>(std::lround((hi - lo) / step)) + 1; }
  double tick(int i) const { return lo + i * step; }
};

}  // namespace

std::string scatter_svg(const PlotSpec& spec) {
  if (spec.points.size() < 2) throw ValidationError("points", "a plot needs at least 2 points");
  if (spec.x_label.empty()) throw ValidationError("x_label", "x label must not be empty");
  if (spec.y_label.empty()) throw ValidationError("y_label", "y label must not be empty");
  if (spec.title.empty()) throw ValidationError("title", "title must not be empty");
  if (spec.width <= 0 || spec.height <= 0) {
    throw ValidationError("width", "plot size must be positive");
  }
  for (const auto& p : spec.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("points", "plot points must be finite");
    }
  }

  const auto [xmin_it, xmax_it] = std::minmax_element(
      spec.points.begin(), spec.points.end(), [](auto& a, auto& b) { return a.x < b.x; });
  const double x_min = xmin_it->x;
  const double x_max = xmax_it->x;
  if (x_min == x_max) throw ValidationError("points", "all x values are equal");

  const double line_y1 = predict(spec.model, x_min);
  const double line_y2 = predict(spec.model, x_max);
  double y_min = std::min(line_y1, line_y2);
  double y_max = std::max(line_y1, line_y2);
  for (const auto& p : spec.points) {
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }

  const Axis xa = Axis::covering(x_min, x_max);
  const Axis ya = Axis::covering(y_min, y_max);
  const double w = spec.width;
  const double h = spec.height;
  const double left = kMarginLeft;
  const double right = w - kMarginRight;
  const double top = kMarginTop;
  const double bottom = h - kMarginBottom;
  auto sx = [&](double x) { return left + (x - xa.lo) / (xa.hi - xa.lo) * (right - left); };
  auto sy = [&](double y) { return bottom - (y - ya.lo) / (ya.hi - ya.lo) * (bottom - top); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
       "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " + std::to_string(spec.height) +
       "\">\n";
  s += "<title>" + xml_escape(spec.title) + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
       std::to_string(spec.height) + "\" fill=\"white\"/>\n";

  s += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + px(left) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(right) + "\" y2=\"" +
       px(bottom) + "\"/>\n";
  s += "<line x1=\"" + px(left) + "\" y1=\"" + px(top) + "\" x2=\"" + px(left) + "\" y2=\"" +
       px(bottom) + "\"/>\n";
  s += "</g>\n";

  s += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i < xa.tick_count(); ++i) {
    const double x = sx(xa.tick(i));
    s += "<line x1=\"" + px(x) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(x) + "\" y2=\"" +
         px(bottom + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + px(x) + "\" y=\"" + px(bottom + 18) + "\" text-anchor=\"middle\">" +
         format_fixed(xa.tick(i), xa.decimals) + "</text>\n";
  }
  for (int i = 0; i < ya.tick_count(); ++i) {
    const double y = sy(ya.tick(i));
    s += "<line x1=\"" + px(left - 5) + "\" y1=\"" + px(y) + "\" x2=\"" + px(left) + "\" y2=\"" +
         px(y) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + px(left - 8) + "\" y=\"" + px(y + 4) + "\" text-anchor=\"end\">" +
         format_fixed(ya.tick(i), ya.decimals) + "</text>\n";
  }
  s += "</g>\n";

  const double mid_x = (left + right) / 2.0;
  const double mid_y = (top + bottom) / 2.0;
  s += "<text class=\"title\" x=\"" + px(w / 2.0) +
       "\" y=\"24.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
       xml_escape(spec.title) + "</text>\n";
  s += "<text class=\"x-label\" x=\"" + px(mid_x) + "\" y=\"" + px(h - 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
       xml_escape(spec.x_label) + "</text>\n";
  s += "<text class=\"y-label\" x=\"20.00\" y=\"" + px(mid_y) + "\" transform=\"rotate(-90 20.00 " +
       px(mid_y) + ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
       xml_escape(spec.y_label) + "</text>\n";

  s += "<g class=\"points\" fill=\"steelblue\" fill-opacity=\"0.7\">\n";
  for (const auto& p : spec.points) {
    s += "<circle class=\"point\" cx=\"" + px(sx(p.x)) + "\" cy=\"" + px(sy(p.y)) +
         "\" r=\"3\"/>\n";
  }
  s += "</g>\n";

  s += "<line class=\"fit\" x1=\"" + px(sx(x_min)) + "\" y1=\"" + px(sy(line_y1)) + "\" x2=\"" +
       px(sx(x_max)) + "\" y2=\"" + px(sy(line_y2)) +
       "\" stroke=\"firebrick\" stroke-width=\"2\" data-x1=\"" + format_shortest(x_min) +
       "\" data-y1=\"" + format_shortest(line_y1) + "\" data-x2=\"" + format_shortest(x_max) +
       "\" data-y2=\"" + format_shortest(line_y2) + "\"/>\n";
  s += "</svg>\n";
  return s;
}

std::string data_table(std::span<const Point> points, const LinearModel& model) {
  std::string out = "x\ty\tfitted\tresidual\n";
  for (const auto& p : points) {
    const double fitted = predict(model, p.x);
    out += format_shortest(p.x) + '\t' + format_shortest(p.y) + '\t' + format_shortest(fitted) +
           '\t' + format_shortest(p.y - fitted) + '\n';
  }
  return out;
}

}  // namespace efpm
