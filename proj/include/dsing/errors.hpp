#ifndef DSING_ERRORS_HPP
#define DSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsing {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two group elements (or matrices) from groups of different order were combined.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Which defining condition of a connecting set was violated.
enum class SetCondition {
  kSymmetric,       // (i)   H = H^{-1}
  kIdentityFree,    // (ii)  1 is not in H
  kGenerating,      // (iii) <H> = G
  kMalformed,       // not a set over the right group at all
};

const char* to_string(SetCondition c);

class ConnectingSetError : public Error {
 public:
  ConnectingSetError(SetCondition condition, const std::string& detail);
  SetCondition condition() const { return condition_; }

 private:
  SetCondition condition_;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A block-structure law of an (E2)-ordered dihedral adjacency matrix failed.
class StructureError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Polynomial handed to the circulant test has degree >= n.
class NotReducedError : public Error {
 public:
  using Error::Error;
};

class InvalidDivisor : public Error {
 public:
  using Error::Error;
};

}  // namespace dsing

#endif  // DSING_ERRORS_HPP
