#ifndef ENTLAB_ERRORS_HPP
#define ENTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entlab {

// Thrown when matrix/vector dimensions or tensor shapes do not match.
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a parameter lies outside its documented domain
// (e.g. a Werner parameter q outside [0,1], a non-PSD "density matrix").
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical procedure fails to deliver its contract
// (bracket failures, non-converged iterations).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entlab

#endif
