// csv.hpp — fixed-format numeric CSV output shared by the exporters

#pragma once

#include <initializer_list>
#include <ostream>
#include <string>

namespace esst::csv {

// 12 significant digits, printf %.12g; "nan"/"inf" for non-finite values.
std::string format(double v);

void write_row(std::ostream& os, std::initializer_list<double> values);

} // namespace esst::csv
