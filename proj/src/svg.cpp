#include "vlse/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "vlse/errors.hpp"

namespace vlse {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<SvgSeries>& series,
                              int width, int height) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series) {
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (!std::isfinite(xmin) || !std::isfinite(ymin))
    throw DomainError("render_line_chart: no finite data");
  if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
  if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + pw * (x - xmin) / (xmax - xmin); };
  auto py = [&](double y) { return top + ph * (1.0 - (y - ymin) / (ymax - ymin)); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(width / 2.0) + "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

  // axes with 5 ticks each
  svg += "<g stroke=\"#444\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(left + pw) +
         "\" y2=\"" + num(top + ph) + "\"/>\n";
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" +
         num(top + ph) + "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    svg += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px(fx)) +
           "\" y2=\"" + num(top + ph + 5) + "\"/>\n";
    svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(top + ph + 18) +
           "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#222\">" + tick_label(fx) +
           "</text>\n";
    svg += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(py(fy)) + "\"/>\n";
    svg += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\" stroke=\"none\" fill=\"#222\">" + tick_label(fy) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + num(left + pw / 2.0) + "\" y=\"" + num(height - 12.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(top + ph / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"" +
         "rotate(-90 16 " + num(top + ph / 2.0) + ")\">" + y_label + "</text>\n";

  int legend_y = static_cast<int>(top) + 4;
  for (const auto& s : series) {
    svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      svg += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
    }
    svg += "\"/>\n";
    if (!s.label.empty()) {
      svg += "<line x1=\"" + num(left + pw - 130) + "\" y1=\"" + std::to_string(legend_y) +
             "\" x2=\"" + num(left + pw - 110) + "\" y2=\"" + std::to_string(legend_y) +
             "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
      svg += "<text x=\"" + num(left + pw - 104) + "\" y=\"" + std::to_string(legend_y + 4) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label + "</text>\n";
      legend_y += 16;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace vlse
