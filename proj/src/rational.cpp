#include "spw/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace spw {

namespace {

std::int64_t parse_int(const std::string& text, std::size_t begin, std::size_t end) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, out);
  if (begin == end || ec != std::errc{} || ptr != text.data() + end)
    throw std::invalid_argument("malformed rational: " + text);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, 0, text.size()));
  const auto den = parse_int(text, slash + 1, text.size());
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(parse_int(text, 0, slash), den);
}

}  // namespace spw
