// Minimal deterministic SVG line charts for sweep tables. Output depends
// only on the table contents (no timestamps, no randomness), so repeated
// renders are byte-identical.

#pragma once

#include <string>
#include <vector>

#include "wqsdc/sweeptable.hpp"

namespace wqsdc {

// One polyline per y column against the x column, on a fixed 640x480
// canvas with axes and min/max tick labels. Rows where x restarts a sweep
// (x decreases) begin a new segment, so grouped tables plot one curve per
// group. Non-finite values break the line. Throws std::out_of_range for
// unknown column names.
std::string render_line_chart(const SweepTable& table,
                              const std::string& x_column,
                              const std::vector<std::string>& y_columns,
                              const std::string& title);

}  // namespace wqsdc
