#include "sqgeo/rational.hpp"

#include <algorithm>
#include <cctype>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

using boost::multiprecision::cpp_int;

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw InputError("not a fraction: '" + std::string(text) + "'");
  }
  const cpp_int d(std::string{den});
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  return Rational(cpp_int(std::string{num}), d);
}

}  // namespace sqgeo
