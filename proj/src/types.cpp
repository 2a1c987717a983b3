#include "twc/types.hpp"

#include <sstream>

namespace twc {

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      if (text.empty()) throw std::invalid_argument("empty");
      return Rational(BigInt(text));
    }
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  std::ostringstream ss;
  ss << q;
  return ss.str();
}

}  // namespace twc
