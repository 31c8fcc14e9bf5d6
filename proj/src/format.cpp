#include "rkgrgg/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace rkgrgg {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string format_general(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.*g", digits, v);
  return {buf.data(), static_cast<std::size_t>(len)};
}

}  // namespace rkgrgg
