#pragma once

#include <string>
#include <utility>
#include <vector>

namespace simdepth {

struct BoxplotSummary;

/// Minimal SVG chart: one data rectangle with linear axes, ticks, and a
/// handful of primitives in data coordinates.
class SvgChart {
 public:
  SvgChart(double x_min, double x_max, double y_min, double y_max, std::string title);

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color);
  void hline(double y, double x0, double x1, const std::string& color, bool dashed = true);
  void marker(double x, double y, const std::string& color);
  void box(double x, double half_width, const BoxplotSummary& s, const std::string& color);
  void label(double x, double y, const std::string& text);
  void legend(const std::string& text, const std::string& color);
  void x_label(const std::string& text) { x_label_ = text; }
  void y_label(const std::string& text) { y_label_ = text; }

  std::string str() const;

 private:
  double px(double x) const;
  double py(double y) const;

  double x_min_, x_max_, y_min_, y_max_;
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<std::string> body_;
  std::vector<std::pair<std::string, std::string>> legend_;
};

/// Color for series i.
const std::string& palette(std::size_t i);

}  // namespace simdepth
