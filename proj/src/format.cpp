#include "movnorm/format.hpp"

#include <charconv>
#include <system_error>

namespace movnorm {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

} // namespace movnorm
