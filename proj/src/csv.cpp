#include "zlab/csv.hpp"

#include <cmath>
#include <cstdio>

namespace zlab::csv {

std::string format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Writer::Writer(std::ostream& os, std::initializer_list<std::string_view> header) : os_(os) {
  bool first = true;
  for (std::string_view h : header) put(h, first);
  os_ << '\n';
}

}  // namespace zlab::csv
