#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpoly {

/// Enumeration guards. Every exhaustive scan refuses inputs above its cap
/// instead of truncating.
struct Caps {
  std::size_t edges = 20;
  std::size_t vertices = 20;
};

/// Bitmask-based scans cannot go past this many edges or vertices.
inline constexpr std::size_t kMaxMaskBits = 63;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t required, std::size_t cap)
      : std::runtime_error(what + ": " + std::to_string(required) + " exceeds the cap of " +
                           std::to_string(cap) + " (raise the cap to at least " +
                           std::to_string(required) + ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// A documented hypothesis of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws CapExceeded when `required > cap`, or when the cap itself is past
/// what a 64-bit mask can address.
void check_cap(const std::string& what, std::size_t required, std::size_t cap);

}  // namespace fpoly
