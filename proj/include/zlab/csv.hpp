#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace zlab::csv {

/// Formats a double with 15 significant digits.
std::string format(double v);

/// Minimal CSV writer: header row, LF line endings, no quoting (fields never
/// contain separators).
class Writer {
 public:
  Writer(std::ostream& os, std::initializer_list<std::string_view> header);

  template <class... Ts>
  void row(const Ts&... fields) {
    bool first = true;
    ((put(fields, first)), ...);
    os_ << '\n';
  }

 private:
  void sep(bool& first) {
    if (!first) os_ << ',';
    first = false;
  }
  void put(double v, bool& first) {
    sep(first);
    os_ << format(v);
  }
  void put(std::int64_t v, bool& first) {
    sep(first);
    os_ << v;
  }
  void put(int v, bool& first) { put(static_cast<std::int64_t>(v), first); }
  void put(std::size_t v, bool& first) {
    sep(first);
    os_ << v;
  }
  void put(bool v, bool& first) {
    sep(first);
    os_ << (v ? "true" : "false");
  }
  void put(std::string_view v, bool& first) {
    sep(first);
    os_ << v;
  }
  void put(const std::string& v, bool& first) { put(std::string_view(v), first); }
  void put(const char* v, bool& first) { put(std::string_view(v), first); }

  std::ostream& os_;
};

}  // namespace zlab::csv
