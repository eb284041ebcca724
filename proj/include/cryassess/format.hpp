#pragma once

#include <string>

namespace cry::fmtutil {

// Central number formatting: proportions at 2 decimals, percentages at
// 2 decimals with a % sign, scores at 3 decimals. Display rounding only;
// nothing upstream ever rounds.
std::string proportion(double value);
std::string percent(double value);  // value is a fraction, 0.5 -> "50.00%"
std::string score(double value);

}  // namespace cry::fmtutil
