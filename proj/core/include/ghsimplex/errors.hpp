#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghsimplex {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A raw distance matrix failed validation. `kind` identifies the violated
// invariant, `i`/`j`/`k` the offending indices (unused slots are -1).
class ValidationError : public Error {
 public:
  enum class Kind {
    NonSquare,
    NonFinite,
    AsymmetricEntry,
    NegativeEntry,
    NonzeroDiagonal,
    ZeroOffDiagonal,
    TriangleViolation,
  };

  ValidationError(Kind kind, std::string msg, int i = -1, int j = -1, int k = -1)
      : Error(std::move(msg)), kind(kind), i(i), j(j), k(k) {}

  Kind kind;
  int i;
  int j;
  int k;
};

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("subset must be non-empty") {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(int index, int n)
      : Error("point index " + std::to_string(index) + " out of range [0, " +
              std::to_string(n) + ")") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("coordinate vectors disagree in dimension: expected " +
              std::to_string(expected) + ", got " + std::to_string(got)) {}
};

class EmptyPointSet : public Error {
 public:
  EmptyPointSet() : Error("point set must contain at least one point") {}
};

class NonpositiveScale : public Error {
 public:
  explicit NonpositiveScale(double c)
      : Error("scale factor must be positive, got " + std::to_string(c)) {}
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class BadBlockCount : public Error {
 public:
  BadBlockCount(int m, int n)
      : Error("block count m = " + std::to_string(m) +
              " outside [1, n] for n = " + std::to_string(n)) {}
};

class SizeMismatch : public Error {
 public:
  SizeMismatch(int partition_n, int space_n)
      : Error("partition indexes " + std::to_string(partition_n) +
              " points but the space has " + std::to_string(space_n)) {}
};

class NonpositiveLambda : public Error {
 public:
  explicit NonpositiveLambda(double lambda)
      : Error("simplex scale lambda must be positive, got " + std::to_string(lambda)) {}
};

class LambdaOutOfRange : public Error {
 public:
  LambdaOutOfRange(double lambda, double upper)
      : Error("lambda = " + std::to_string(lambda) + " outside the open interval (0, " +
              std::to_string(upper) + ")") {}
};

class NonpositiveD : public Error {
 public:
  explicit NonpositiveD(double d)
      : Error("sphere radius parameter d must be positive, got " + std::to_string(d)) {}
};

// Exhaustive scan refused or aborted because it would exceed its budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("search size " + std::to_string(required) + " exceeds budget " +
              std::to_string(budget)),
        required(required),
        budget(budget) {}

  std::uint64_t required;
  std::uint64_t budget;
};

}  // namespace ghsimplex
