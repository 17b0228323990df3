#pragma once

#include <stdexcept>
#include <string>

namespace sidkit {

/// Validation errors come from bad inputs or violated preconditions;
/// numerical errors come from the mathematics of the input itself
/// (a zero constant term, a vanishing characteristic function, overflow).
enum class ErrorKind { Validation, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& message)
      : std::runtime_error(message), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

namespace errors {

inline Error validation(std::string name, const std::string& message) {
  return Error(ErrorKind::Validation, std::move(name), message);
}

inline Error numerical(std::string name, const std::string& message) {
  return Error(ErrorKind::Numerical, std::move(name), message);
}

}  // namespace errors
}  // namespace sidkit
