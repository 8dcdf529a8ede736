#include "hilbscroll/error.hpp"

#include <utility>

namespace hilbscroll {

InputError::InputError(std::string code, const std::string& detail)
    : std::invalid_argument(code + ": " + detail), code_(std::move(code)) {}

}  // namespace hilbscroll
