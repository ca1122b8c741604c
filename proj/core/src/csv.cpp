// csv.cpp

#include "esst/csv.hpp"

#include <cmath>
#include <cstdio>

namespace esst::csv {

std::string format(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_row(std::ostream& os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << format(v);
        first = false;
    }
    os << '\n';
}

} // namespace esst::csv
