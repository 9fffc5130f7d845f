#pragma once

#include <string>
#include <vector>

namespace vlse {

struct SvgSeries {
  std::string label;
  std::string color;  // e.g. "#1f77b4"
  std::vector<double> x;
  std::vector<double> y;
};

// Static line chart; no external processes involved.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<SvgSeries>& series,
                              int width = 720, int height = 440);

}  // namespace vlse
