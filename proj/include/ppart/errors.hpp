#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

/// Argument outside the mathematical domain of an operation (zero polynomial,
/// malformed partition, non-integral value where an integer is required).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Unsupported or malformed group specification.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Required table data (exceptional diagrams, character tables) not loaded.
class DataMissingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A data-file record failed validation. `index` is the zero-based record
/// position in the input.
class InvalidRecord : public std::runtime_error {
public:
  InvalidRecord(std::size_t index, const std::string& what)
    : std::runtime_error("record " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Internal consistency violation; indicates a bug, never bad input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ppart
