#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "realeig/form.hpp"

namespace realeig {

/// Syntax or semantic error; `offset` is the byte position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ParseOptions {
  /// Homogenizing variable ('y' for binary, 'z' for ternary output).
  std::optional<char> homogenize;
  /// 2 or 3; 0 picks 3 when z occurs (or homogenize = 'z'), else 2.
  int num_vars = 0;
};

/// Parses +, -, *, /, ^, parentheses, implicit products ("2xy", "x(y+1)"),
/// integer, decimal and a/b literals, and the variables x, y, z.
/// Division is by constants only; exponents are non-negative integers.
Form parse_form(std::string_view text, const ParseOptions& options = {});

/// Text that parse_form maps back to the same form.
std::string print_form(const Form& f);

}  // namespace realeig
