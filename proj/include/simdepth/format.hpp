#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simdepth {

/// printf("%.17g"): round-trippable doubles for CSV output.
std::string fmt_g17(double x);

/// Parses "a,b,c" into doubles. Throws InputError on malformed fields.
std::vector<double> parse_double_list(std::string_view text);

}  // namespace simdepth
