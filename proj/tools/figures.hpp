#pragma once

#include <string>

namespace floorlab::cli {

/// Emits <out>_points.csv and <out>_lines.csv for one of the figure cases
/// fig1-left, fig1-mid, fig1-right, fig2. Returns a short JSON summary.
std::string emit_figure(const std::string& which, const std::string& out_prefix);

}  // namespace floorlab::cli
