#pragma once

#include <stdexcept>
#include <string>

namespace alsx {

/// Error raised while reading library, netlist, dataset or model files.
/// Carries the 1-based line number and/or byte offset when known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message, long line = -1, long byte_offset = -1)
      : std::runtime_error(decorate(message, line, byte_offset)),
        line_(line),
        byte_offset_(byte_offset) {}

  long line() const { return line_; }
  long byte_offset() const { return byte_offset_; }

private:
  static std::string decorate(const std::string& message, long line, long byte_offset) {
    std::string out = message;
    if (line >= 0) out += " (line " + std::to_string(line) + ")";
    if (byte_offset >= 0) out += " (byte offset " + std::to_string(byte_offset) + ")";
    return out;
  }

  long line_;
  long byte_offset_;
};

} // namespace alsx
