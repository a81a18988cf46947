#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace autgenus {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil_of(const Rational& r);
std::string to_string(const Rational& r);
/// Accepts "p", "p/q" and decimal "x.y".
Rational parse_rational(const std::string& text);

}  // namespace autgenus
