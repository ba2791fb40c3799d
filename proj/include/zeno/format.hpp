// format.hpp: locale-independent number formatting for CSV/JSON artifacts

#pragma once

#include <string>

namespace zeno {

inline constexpr int kSignificantDigits = 12;

// Shortest "%g" rendering that reproduces the value rounded to 12 significant
// digits. Negative zero prints as "0". Throws NumericError for NaN/Inf.
std::string format_number(double value);

// The value after rounding to 12 significant digits.
double round_significant(double value);

} // namespace zeno
