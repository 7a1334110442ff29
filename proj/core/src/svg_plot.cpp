#include "kcover/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "kcover/csv_io.hpp"

namespace kcover {

namespace {

constexpr double kPanelWidth = 360.0;
constexpr double kPanelHeight = 260.0;
constexpr double kMarginLeft = 46.0;
constexpr double kMarginRight = 14.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 58.0;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                               "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Series {
  std::string name;
  std::vector<double> values;  // indexed by period - 1
};

std::vector<Series> extract_series(const MetricsTrace& trace,
                                   std::span<const int> k_values,
                                   PlotColumn column) {
  std::vector<Series> out;
  if (column == PlotColumn::Awake) {
    Series s;
    s.name = "awake";
    for (const MetricsRow& row : trace.rows) s.values.push_back(row.awake);
    out.push_back(std::move(s));
    return out;
  }
  for (int k : k_values) {
    if (k < 1 || k > kThetaColumns) {
      throw std::invalid_argument("plot supports k in 1..3");
    }
    Series s;
    s.name = (column == PlotColumn::Theta ? "theta" : "theta_p") + std::to_string(k);
    for (const MetricsRow& row : trace.rows) {
      const auto& cols = column == PlotColumn::Theta ? row.theta : row.theta_prime;
      s.values.push_back(cols[static_cast<std::size_t>(k - 1)]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void render_panel(std::string& svg, double x0, const std::string& title,
                  const std::vector<Series>& series, double y_max) {
  const double plot_x = x0 + kMarginLeft;
  const double plot_y = kMarginTop;
  const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
  const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;

  std::size_t periods = 0;
  for (const Series& s : series) periods = std::max(periods, s.values.size());
  const double x_max = std::max<double>(1.0, static_cast<double>(periods));

  auto sx = [&](double period) {
    return plot_x + (period - 1.0) / std::max(1.0, x_max - 1.0) * plot_w;
  };
  auto sy = [&](double v) { return plot_y + plot_h - v / y_max * plot_h; };

  svg += "<text x=\"" + fmt(x0 + kPanelWidth / 2) + "\" y=\"18\" text-anchor=\"middle\" "
         "font-size=\"13\" font-family=\"sans-serif\">" + title + "</text>\n";
  svg += "<rect x=\"" + fmt(plot_x) + "\" y=\"" + fmt(plot_y) + "\" width=\"" +
         fmt(plot_w) + "\" height=\"" + fmt(plot_h) +
         "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // y ticks: 5 divisions
  for (int i = 0; i <= 5; ++i) {
    const double v = y_max * i / 5.0;
    const double y = sy(v);
    svg += "<line x1=\"" + fmt(plot_x - 4) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
           fmt(plot_x) + "\" y2=\"" + fmt(y) + "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + fmt(plot_x - 7) + "\" y=\"" + fmt(y + 3.5) +
           "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" +
           fmt(v) + "</text>\n";
  }
  // x ticks: every 5 periods (or fewer for short traces)
  const int step = periods > 30 ? 5 : (periods > 10 ? 2 : 1);
  for (int p = 1; p <= static_cast<int>(x_max); p += step) {
    const double x = sx(p);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(plot_y + plot_h) + "\" x2=\"" +
           fmt(x) + "\" y2=\"" + fmt(plot_y + plot_h + 4) + "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(plot_y + plot_h + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" +
           std::to_string(p) + "</text>\n";
  }
  svg += "<text x=\"" + fmt(plot_x + plot_w / 2) + "\" y=\"" +
         fmt(plot_y + plot_h + 30) + "\" text-anchor=\"middle\" font-size=\"11\" "
         "font-family=\"sans-serif\">period</text>\n";

  // polylines + legend
  for (std::size_t si = 0; si < series.size(); ++si) {
    const Series& s = series[si];
    const char* color = kSeriesColors[si % std::size(kSeriesColors)];
    if (!s.values.empty()) {
      std::string points;
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        points += fmt(sx(static_cast<double>(i + 1))) + "," + fmt(sy(s.values[i])) + " ";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    }
    const double lx = plot_x + 8 + 90.0 * static_cast<double>(si % 3);
    const double ly = plot_y + plot_h + 42 + 12.0 * static_cast<double>(si / 3);
    svg += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 3) + "\" x2=\"" +
           fmt(lx + 16) + "\" y2=\"" + fmt(ly - 3) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(lx + 20) + "\" y=\"" + fmt(ly) +
           "\" font-size=\"10\" font-family=\"sans-serif\">" + s.name + "</text>\n";
  }
}

}  // namespace

std::string render_traces_svg(std::span<const std::string> csv_paths,
                              std::span<const int> k_values, PlotColumn column) {
  std::vector<std::pair<std::string, MetricsTrace>> panels;
  for (const std::string& path : csv_paths) {
    panels.emplace_back(std::filesystem::path(path).stem().string(),
                        trace_from_csv(read_file(path), path));
  }
  if (panels.empty()) panels.emplace_back("empty", MetricsTrace{});

  double y_max = 1.0;
  if (column == PlotColumn::Awake) {
    for (const auto& [name, trace] : panels) {
      for (const MetricsRow& row : trace.rows) {
        y_max = std::max(y_max, static_cast<double>(row.awake));
      }
    }
    y_max = std::ceil(y_max / 10.0) * 10.0;
  }

  const double width = kPanelWidth * static_cast<double>(panels.size());
  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      fmt(width) + "\" height=\"" + fmt(kPanelHeight) + "\" viewBox=\"0 0 " +
      fmt(width) + " " + fmt(kPanelHeight) + "\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(svg, kPanelWidth * static_cast<double>(i), panels[i].first,
                 extract_series(panels[i].second, k_values, column), y_max);
  }
  svg += "</svg>\n";
  return svg;
}

void plot_traces(std::span<const std::string> csv_paths,
                 std::span<const int> k_values, PlotColumn column,
                 const std::string& out_path) {
  write_file(out_path, render_traces_svg(csv_paths, k_values, column));
}

}  // namespace kcover
