#include "cryassess/format.hpp"

#include <fmt/format.h>

namespace cry::fmtutil {

std::string proportion(double value) { return fmt::format("{:.2f}", value); }

std::string percent(double value) { return fmt::format("{:.2f}%", value * 100.0); }

std::string score(double value) { return fmt::format("{:.3f}", value); }

}  // namespace cry::fmtutil
