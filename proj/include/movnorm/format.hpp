#pragma once

#include <string>

namespace movnorm {

/// Shortest decimal that parses back to exactly `v`; locale independent.
std::string format_double(double v);

} // namespace movnorm
