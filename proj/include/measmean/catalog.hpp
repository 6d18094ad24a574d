#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "measmean/measure.hpp"

namespace measmean {

/// Built-in measures: lebesgue, geometric, harmonic, logarithmic, square,
/// exponential. Throws UnknownMeasure for anything else.
MeasureSpec catalog(std::string_view name);

std::vector<std::string> catalog_names();

}  // namespace measmean
