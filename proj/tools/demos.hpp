#pragma once

#include <optional>
#include <string>

namespace powertriad::cli {

/// Self-auditing demonstration runs. Each prints a check table (expected vs
/// computed, with tolerances), writes plot-ready CSV data plus a manifest into
/// `out_dir`, and returns 0 when every check passes, 1 otherwise.
/// Valid names: power-triangle, pos-neg, bedrosian, czarnecki, thevenin-tv.
/// `delta` is the voltage-current phase offset for the demos that take one
/// (power-triangle, pos-neg); the others ignore it.
int run_demo(const std::string& name, std::optional<double> delta,
             const std::string& out_dir);

} // namespace powertriad::cli
