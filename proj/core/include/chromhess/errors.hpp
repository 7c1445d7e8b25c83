#ifndef CHROMHESS_ERRORS_HPP
#define CHROMHESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromhess {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// Arithmetic between multivariate polynomials over different indeterminate
// families (or different variable counts).
class FamilyMismatch : public Error {
public:
  using Error::Error;
};

// exact_divide found no exact quotient.
class NotDivisible : public Error {
public:
  using Error::Error;
};

// An ordered graph fails the interval-closure condition, so it is not of
// the form G(h) for any Hessenberg function h.
class NotUnitInterval : public Error {
public:
  using Error::Error;
};

// Connected pieces of an ordered graph interleave in the vertex order, so
// there is no factorisation into contiguous connected blocks.
class NotDecomposable : public Error {
public:
  using Error::Error;
};

// A user-supplied per-vertex polynomial violates an incoming edge condition.
class ChooserViolation : public Error {
public:
  using Error::Error;
};

// A flow-up linear system has no solution.  Never expected; raised
// defensively if an inconsistency is detected.
class Infeasible : public Error {
public:
  using Error::Error;
};

// A coordinate vector is not in the span of the flow-up basis.
class NotInSpan : public Error {
public:
  using Error::Error;
};

// A diagonal coefficient in a graded trace has positive degree.
class NonScalarDiagonal : public Error {
public:
  using Error::Error;
};

// A cancellation-pairing precondition does not hold for the given graph.
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

// Malformed Hessenberg function input.
class InvalidH : public Error {
public:
  using Error::Error;
};

// Requested size exceeds the configured ceiling.
class SizeExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace chromhess

#endif
