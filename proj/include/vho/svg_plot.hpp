#ifndef VHO_SVG_PLOT_HPP
#define VHO_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace vho {

struct PlotSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  std::string color;
  bool markers = false;
};

/// Minimal line plot rendered to standalone SVG: frame, ticks with labels,
/// axis titles and a legend. Output depends only on the inputs.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label)
      : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

  void add_series(PlotSeries series) { series_.push_back(std::move(series)); }
  const std::vector<PlotSeries>& series() const { return series_; }

  std::string render() const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<PlotSeries> series_;
};

/// Evenly spaced "nice" tick positions (steps of 1, 2 or 5 times a power of
/// ten) covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target_count = 6);

}  // namespace vho

#endif  // VHO_SVG_PLOT_HPP
