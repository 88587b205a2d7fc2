#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace eae {

// RFC-4180-style quoting: fields containing commas, quotes or newlines are
// wrapped in double quotes with embedded quotes doubled. Rows end in '\n'.
std::string csv_quote(const std::string& field);
void csv_row(std::ostream& out, const std::vector<std::string>& fields);

std::string fmt_double(double v);  // %.10g, stable across replays
std::string fmt_u64(uint64_t v);
std::string fmt_int(int v);

}  // namespace eae
