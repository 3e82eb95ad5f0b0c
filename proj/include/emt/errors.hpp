#pragma once

#include <stdexcept>
#include <string>

namespace emt {

enum class ErrorKind {
  Io,          // file access problems
  Parse,       // malformed input documents or rule text
  Config,      // bad registry or run configuration
  Validation,  // ruleset rejected by static checks
  Evaluation,  // source-term or value-expression evaluation failure
  Conflict,    // contradictory writes during transformation
  Integrity,   // model invariant violated (ids, endpoints)
  NotFound,    // lookup misses (trace ids, rule names)
  Unsupported, // capability not implemented by an interpreter
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

}  // namespace emt
