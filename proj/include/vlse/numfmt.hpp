#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>

#include "vlse/errors.hpp"

namespace vlse {

// 17 significant digits: enough to round-trip any double, locale-independent.
inline std::string fmt17(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Shortest representation that round-trips; used in tokens and file names.
inline std::string fmt_shortest(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw MalformedInput("not a number: '" + std::string(s) + "'");
  return v;
}

inline long long parse_int(std::string_view s) {
  long long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw MalformedInput("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace vlse
