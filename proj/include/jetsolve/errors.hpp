#ifndef JETSOLVE_ERRORS_HPP
#define JETSOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetsolve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point that leaves a variable unassigned.
class MissingAssignmentError : public Error {
 public:
  explicit MissingAssignmentError(std::string variable)
      : Error("no value assigned to variable '" + variable + "'"), variable_(std::move(variable)) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroLeadingCoefficientError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of equations/variables, or a system outside an operation's domain.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Multi-index or function index outside the codec's ranges.
class RangeError : public Error {
 public:
  using Error::Error;
};

class EliminationError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UndefinedResultantError : public Error {
 public:
  using Error::Error;
};

/// A candidate point does not zero the prolonged equation with index `alpha`.
class NotASolutionError : public Error {
 public:
  explicit NotASolutionError(std::size_t alpha)
      : Error("point does not satisfy equation alpha=" + std::to_string(alpha)), alpha_(alpha) {}
  std::size_t alpha() const noexcept { return alpha_; }

 private:
  std::size_t alpha_;
};

}  // namespace jetsolve

#endif  // JETSOLVE_ERRORS_HPP
