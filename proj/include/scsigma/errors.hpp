#pragma once

#include <stdexcept>
#include <string>

namespace scsigma {

/// Input outside the mathematical/physical domain of an operation.
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {}
};

/// A numerical routine exhausted its budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent run configuration. Carries the offending
/// line (0 when no single line applies) and key.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, std::string key, const std::string &message)
        : std::runtime_error(line > 0 ? "config error at line " + std::to_string(line) + ": key '" + key +
                                            "': " + message
                                      : "config error: key '" + key + "': " + message),
          line_(line),
          key_(std::move(key)) {}

    int line() const { return line_; }
    const std::string &key() const { return key_; }

  private:
    int line_;
    std::string key_;
};

} // namespace scsigma
