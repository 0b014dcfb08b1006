#include "simdepth/svg.hpp"

#include <cmath>
#include <cstdio>

#include "simdepth/experiments.hpp"

namespace simdepth {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Roughly five ticks at 1-2-5 multiples.
std::vector<double> ticks(double lo, double hi) {
  std::vector<double> out;
  const double span = hi - lo;
  if (!(span > 0.0)) {
    out.push_back(lo);
    return out;
  }
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) {
    out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
  }
  return out;
}

}  // namespace

const std::string& palette(std::size_t i) {
  static const std::vector<std::string> colors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                  "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
  return colors[i % colors.size()];
}

SvgChart::SvgChart(double x_min, double x_max, double y_min, double y_max, std::string title)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), title_(std::move(title)) {}

double SvgChart::px(double x) const {
  return kLeft + (x - x_min_) / (x_max_ - x_min_) * (kWidth - kLeft - kRight);
}

double SvgChart::py(double y) const {
  return kHeight - kBottom - (y - y_min_) / (y_max_ - y_min_) * (kHeight - kTop - kBottom);
}

void SvgChart::polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
  std::string s = "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) {
    s += num(px(x)) + "," + num(py(y)) + " ";
  }
  s += "\"/>";
  body_.push_back(std::move(s));
}

void SvgChart::hline(double y, double x0, double x1, const std::string& color, bool dashed) {
  body_.push_back("<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(px(x1)) + "\" y2=\"" +
                  num(py(y)) + "\" stroke=\"" + color + "\"" + (dashed ? " stroke-dasharray=\"5,4\"" : "") + "/>");
}

void SvgChart::marker(double x, double y, const std::string& color) {
  body_.push_back("<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"4\" fill=\"" + color + "\"/>");
}

void SvgChart::box(double x, double half_width, const BoxplotSummary& s, const std::string& color) {
  const double l = px(x - half_width);
  const double r = px(x + half_width);
  const double c = px(x);
  auto seg = [&](double x0, double y0, double x1, double y1) {
    body_.push_back("<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
                    "\" stroke=\"" + color + "\"/>");
  };
  body_.push_back("<rect x=\"" + num(l) + "\" y=\"" + num(py(s.q3)) + "\" width=\"" + num(r - l) +
                  "\" height=\"" + num(py(s.q1) - py(s.q3)) + "\" fill=\"none\" stroke=\"" + color + "\"/>");
  seg(l, py(s.median), r, py(s.median));
  seg(c, py(s.q3), c, py(s.max));
  seg(c, py(s.q1), c, py(s.min));
  seg(px(x - half_width / 2), py(s.max), px(x + half_width / 2), py(s.max));
  seg(px(x - half_width / 2), py(s.min), px(x + half_width / 2), py(s.min));
}

void SvgChart::label(double x, double y, const std::string& text) {
  body_.push_back("<text x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) +
                  "\" font-size=\"11\" text-anchor=\"middle\">" + escape(text) + "</text>");
}

void SvgChart::legend(const std::string& text, const std::string& color) { legend_.emplace_back(text, color); }

std::string SvgChart::str() const {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                  num(kHeight) + "\" font-family=\"sans-serif\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">" + escape(title_) +
       "</text>\n";
  const double x0 = px(x_min_), x1 = px(x_max_), y0 = py(y_min_), y1 = py(y_max_);
  s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
       num(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(x_min_, x_max_)) {
    s += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(px(t)) + "\" y2=\"" + num(y0 + 5) +
         "\" stroke=\"black\"/><text x=\"" + num(px(t)) + "\" y=\"" + num(y0 + 18) +
         "\" font-size=\"11\" text-anchor=\"middle\">" + tick_text(t) + "</text>\n";
  }
  for (double t : ticks(y_min_, y_max_)) {
    s += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(py(t)) +
         "\" stroke=\"black\"/><text x=\"" + num(x0 - 8) + "\" y=\"" + num(py(t) + 4) +
         "\" font-size=\"11\" text-anchor=\"end\">" + tick_text(t) + "</text>\n";
  }
  if (!x_label_.empty()) {
    s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + escape(x_label_) + "</text>\n";
  }
  if (!y_label_.empty()) {
    s += "<text x=\"16\" y=\"" + num((y0 + y1) / 2) + "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((y0 + y1) / 2) + ")\">" + escape(y_label_) + "</text>\n";
  }
  for (const auto& line : body_) {
    s += line + "\n";
  }
  double ly = kTop + 10;
  for (const auto& [text, color] : legend_) {
    s += "<line x1=\"" + num(x1 + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(x1 + 32) + "\" y2=\"" + num(ly) +
         "\" stroke=\"" + color + "\" stroke-width=\"2\"/><text x=\"" + num(x1 + 38) + "\" y=\"" + num(ly + 4) +
         "\" font-size=\"11\">" + escape(text) + "</text>\n";
    ly += 18;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace simdepth
