#pragma once

#include <stdexcept>
#include <string>

namespace crfe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (rationals, meshes, polynomial literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

class MeshError : public Error {
 public:
  enum class Kind { NonConforming, Degenerate, Disconnected, Malformed };
  MeshError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(long rank, long size)
      : Error("singular matrix: rank " + std::to_string(rank) + " of " + std::to_string(size)),
        rank_(rank) {}
  long rank() const { return rank_; }

 private:
  long rank_;
};

// A configuration outside the supported theory, e.g. DOFs for even k.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace crfe
