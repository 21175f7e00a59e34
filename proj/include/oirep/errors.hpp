#pragma once

#include <stdexcept>
#include <string>

namespace oirep {

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompositionError : std::runtime_error {
  explicit CompositionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

struct StabilizationError : std::runtime_error {
  explicit StabilizationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure in a module/presentation file; carries 1-based position.
struct FormatError : std::runtime_error {
  int line = 0;
  int column = 0;
  FormatError(const std::string& msg, int ln, int col)
      : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                           std::to_string(col) + ")"),
        line(ln), column(col) {}
};

}  // namespace oirep
