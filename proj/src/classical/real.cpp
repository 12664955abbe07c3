#include "hyperq/classical/real.hpp"

#include <stdexcept>

namespace hyperq::classical {

std::string format_real(Real v) {
  char buf[64];
  const int n = quadmath_snprintf(buf, sizeof buf, "%.36Qg", v);
  if (n < 0 || n >= static_cast<int>(sizeof buf)) throw std::runtime_error("format_real overflow");
  return std::string(buf, static_cast<std::size_t>(n));
}

Real parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const Real v = strtoflt128(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

}  // namespace hyperq::classical
