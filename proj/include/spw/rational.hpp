#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace spw {

/// Exact p/q with p, q reduced and q > 0.
using Rational = boost::rational<std::int64_t>;

/// "p/q", always with an explicit denominator (3 prints as "3/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace spw
