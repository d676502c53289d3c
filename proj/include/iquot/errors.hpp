#pragma once

#include <stdexcept>
#include <string>

namespace iquot {

// Raised when input data violates a structural axiom (group laws,
// homomorphism law, window bounds). The message names the first violated
// axiom together with a witnessing tuple.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the config parser; carries the 1-based line of the offending input.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace iquot
