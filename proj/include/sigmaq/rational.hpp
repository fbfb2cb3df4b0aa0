#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sigmaq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace sigmaq
