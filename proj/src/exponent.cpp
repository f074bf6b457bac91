#include "hw/exponent.hpp"

#include <charconv>

namespace hw {

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  double q = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, q);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("cannot parse exponent '" + std::string(text) + "'");
  return finite(q);  // rejects 0 and near-0
}

std::string Exponent::str() const {
  if (is_plus_infinity()) return "inf";
  if (is_minus_infinity()) return "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), q_);
  return std::string(buf, ptr);
}

}  // namespace hw
