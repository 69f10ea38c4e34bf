#include "vho/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vho {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 30;
constexpr double kTop = 50;
constexpr double kBottom = 60;

std::string fixed(double v, int digits = 2) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
  std::string s(buf, res.ptr);
  if (s == "-0.00" || s == "-0") s = s.substr(1);
  return s;
}

std::string tick_label(double v, double step) {
  if (std::abs(v) < 1e-12 * step) v = 0;
  const int decimals = std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target_count) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(1, target_count);
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * magnitude >= raw) {
      step = m * magnitude;
      break;
    }
  }
  std::vector<double> ticks;
  const double first = std::ceil(lo / step - 1e-9) * step;
  for (double t = first; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
  return ticks;
}

std::string SvgPlot::render() const {
  if (series_.empty()) throw std::domain_error("SvgPlot: no series to render");

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : series_) {
    if (s.xs.size() != s.ys.size() || s.xs.empty())
      throw std::domain_error("SvgPlot: series '" + s.label + "' is empty or has mismatched lengths");
    for (double x : s.xs) xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    for (double y : s.ys) ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0) << "\" height=\""
      << fixed(kHeight, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' ' << fixed(kHeight, 0)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << escape(title_)
      << "</text>\n";

  const double step_x = [&] {
    auto t = nice_ticks(xmin, xmax);
    return t.size() > 1 ? t[1] - t[0] : 1.0;
  }();
  const double step_y = [&] {
    auto t = nice_ticks(ymin, ymax);
    return t.size() > 1 ? t[1] - t[0] : 1.0;
  }();

  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double t : nice_ticks(xmin, xmax))
    out << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(px(t)) << "\" y2=\""
        << fixed(kTop + plot_h) << "\"/>\n";
  for (double t : nice_ticks(ymin, ymax))
    out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(py(t)) << "\" x2=\"" << fixed(kLeft + plot_w)
        << "\" y2=\"" << fixed(py(t)) << "\"/>\n";
  out << "</g>\n";

  out << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(plot_w) << "\" height=\""
      << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  out << "<g text-anchor=\"middle\">\n";
  for (double t : nice_ticks(xmin, xmax))
    out << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(kTop + plot_h + 18) << "\">" << tick_label(t, step_x)
        << "</text>\n";
  out << "</g>\n<g text-anchor=\"end\">\n";
  for (double t : nice_ticks(ymin, ymax))
    out << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py(t) + 4) << "\">" << tick_label(t, step_y)
        << "</text>\n";
  out << "</g>\n";

  out << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n"
      << "<text transform=\"translate(20 " << fixed(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label_) << "</text>\n";

  for (const auto& s : series_) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (i) out << ' ';
      out << fixed(px(s.xs[i])) << ',' << fixed(py(s.ys[i]));
    }
    out << "\"/>\n";
    if (s.markers) {
      out << "<g fill=\"" << s.color << "\">\n";
      for (std::size_t i = 0; i < s.xs.size(); ++i)
        out << "<circle cx=\"" << fixed(px(s.xs[i])) << "\" cy=\"" << fixed(py(s.ys[i])) << "\" r=\"3\"/>\n";
      out << "</g>\n";
    }
  }

  // Legend, top-left corner of the plot area.
  const double lx = kLeft + 12;
  double ly = kTop + 16;
  out << "<g class=\"legend\">\n";
  for (const auto& s : series_) {
    out << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 24) << "\" y2=\""
        << fixed(ly) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(lx + 30) << "\" y=\"" << fixed(ly + 4) << "\">" << escape(s.label) << "</text>\n";
    ly += 18;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace vho
