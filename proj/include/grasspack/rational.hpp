#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace grasspack {

using Rational = boost::rational<std::int64_t>;

// "3/2", or "2" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

}  // namespace grasspack
