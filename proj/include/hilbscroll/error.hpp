#pragma once

#include <stdexcept>
#include <string>

namespace hilbscroll {

/// Raised when an input violates a hypothesis of the classification.
///
/// `code()` is a stable kebab-case identifier (e.g. "speciality-out-of-range")
/// naming the first violated inequality; `what()` is "<code>: <detail>".
class InputError : public std::invalid_argument {
 public:
  InputError(std::string code, const std::string& detail);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace hilbscroll
