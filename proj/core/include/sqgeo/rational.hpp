#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sqgeo {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws InputError otherwise.
Rational parse_fraction(std::string_view text);

}  // namespace sqgeo
