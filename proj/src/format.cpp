#include "zeno/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

std::string print_g(double value, int precision) {
    char buf[40];
    const int n = std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return std::string(buf, static_cast<std::size_t>(n));
}

} // namespace

double round_significant(double value) {
    return std::strtod(print_g(value, kSignificantDigits).c_str(), nullptr);
}

std::string format_number(double value) {
    if (!std::isfinite(value)) throw NumericError("format_number: non-finite value");
    const double target = round_significant(value);
    if (target == 0.0) return "0";
    for (int p = 1; p < kSignificantDigits; ++p) {
        std::string s = print_g(target, p);
        if (std::strtod(s.c_str(), nullptr) == target) return s;
    }
    return print_g(target, kSignificantDigits);
}

} // namespace zeno
