#pragma once

#include <stdexcept>
#include <string>

namespace vlse {

// Base class for all library errors so callers can map them to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

struct GridMismatch : Error {
  explicit GridMismatch(const std::string& what) : Error(what) {}
};

struct FactorizationFailed : Error {
  explicit FactorizationFailed(const std::string& what) : Error(what) {}
};

struct InsufficientSamples : Error {
  explicit InsufficientSamples(const std::string& what) : Error(what) {}
};

struct DegeneratePath : Error {
  explicit DegeneratePath(const std::string& what) : Error(what) {}
};

struct HorizonTooLarge : Error {
  explicit HorizonTooLarge(const std::string& what) : Error(what) {}
};

struct QuadratureNotConverged : Error {
  explicit QuadratureNotConverged(const std::string& what) : Error(what) {}
};

struct DegenerateCell : Error {
  explicit DegenerateCell(const std::string& what) : Error(what) {}
};

struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what) : Error(what) {}
};

}  // namespace vlse
