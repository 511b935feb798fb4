#pragma once

#include <stdexcept>
#include <string>

namespace hcit {

enum class ErrorKind { config, trace, query, simulation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit codes used by the CLI.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
      return 2;
    case ErrorKind::trace:
      return 3;
    case ErrorKind::query:
      return 4;
    case ErrorKind::simulation:
      return 5;
  }
  return 1;
}

}  // namespace hcit
