#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "surfq/cli.hpp"

namespace surfq::cli {

namespace {

double parse_decimal(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("invalid number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  const double num = parse_decimal(text.substr(0, slash), text);
  const double den = parse_decimal(text.substr(slash + 1), text);
  if (den == 0.0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

double round_to(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  const double r = std::round(value * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

std::string format_fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace surfq::cli
