#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfold {

/// Malformed plane or point-set file. line() is 1-based, 0 when the problem is
/// not tied to a single line of input.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tfold
