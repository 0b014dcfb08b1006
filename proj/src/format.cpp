#include "simdepth/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "simdepth/errors.hpp"

namespace simdepth {

std::string fmt_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    std::string field(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw InputError("empty field in number list");
    }
    field = field.substr(first, last - first + 1);
    char* stop = nullptr;
    const double v = std::strtod(field.c_str(), &stop);
    if (stop != field.c_str() + field.size()) {
      throw InputError("cannot parse '" + field + "' as a number");
    }
    out.push_back(v);
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace simdepth
