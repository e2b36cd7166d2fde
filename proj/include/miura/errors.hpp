#ifndef MIURA_ERRORS_HPP
#define MIURA_ERRORS_HPP

#include <stdexcept>

namespace miura {

// Malformed structure: duplicate ids, edges referring to unknown vertices,
// markings naming non-leg edges. Distinct from a failed validation check.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on input outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input (JSON files, constraint strings) could not be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace miura

#endif  // MIURA_ERRORS_HPP
