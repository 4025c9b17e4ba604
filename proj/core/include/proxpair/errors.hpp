#ifndef PROXPAIR_ERRORS_HPP
#define PROXPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace proxpair {

/// Malformed data: block lengths, shape mismatches, norm/vector kind mismatches.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation precondition.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point fell outside the hull a map is declared on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A pair (or other composite object) could not be built consistently.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace proxpair

#endif  // PROXPAIR_ERRORS_HPP
