#pragma once

#include <charconv>
#include <string>

namespace klucb {

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double x) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

}  // namespace klucb
