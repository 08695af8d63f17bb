#pragma once

#include <string>

#include "diracwell/sweep.hpp"

namespace diracwell {

/// gnuplot command file for a sweep table. `csv_name` is embedded verbatim and
/// should be a path relative to the script's own directory.
std::string plot_script(Mode mode, const std::string& csv_name);

}  // namespace diracwell
