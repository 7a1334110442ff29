#pragma once

#include <span>
#include <string>
#include <vector>

namespace kcover {

enum class PlotColumn { Theta, ThetaPrime, Awake };

/// Renders trace CSVs as a self-contained SVG 1.1 line chart and writes it to
/// out_path. One panel per input CSV; within a panel, one polyline per
/// requested k (Theta/ThetaPrime) or a single awake-count polyline. Axis
/// ticks and a legend are always drawn, even when there is no data.
void plot_traces(std::span<const std::string> csv_paths,
                 std::span<const int> k_values, PlotColumn column,
                 const std::string& out_path);

/// In-memory variant, useful for tests.
std::string render_traces_svg(std::span<const std::string> csv_paths,
                              std::span<const int> k_values, PlotColumn column);

}  // namespace kcover
