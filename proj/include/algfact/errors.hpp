#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace algfact {

/* Exceptions signal broken preconditions or resource limits.  Checks whose
 * negative outcome is an ordinary result (axiom checks, membership tests,
 * isomorphism verdicts) return values instead. */

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidField : Error {
  using Error::Error;
};

struct FieldNotFinite : Error {
  FieldNotFinite() : Error("operation requires a finite prime field") {}
};

struct IndexError : Error {
  using Error::Error;
};

/* required = number of candidates the request would visit. */
struct BudgetExceeded : Error {
  std::uint64_t required;
  std::uint64_t budget;
  BudgetExceeded(std::uint64_t required_, std::uint64_t budget_)
      : Error("candidate count " + std::to_string(required_) +
              " exceeds budget " + std::to_string(budget_)),
        required(required_),
        budget(budget_) {}
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotAFactorization : Error {
  using Error::Error;
};

struct InvalidMatchedPair : Error {
  using Error::Error;
};

struct NotABimodule : Error {
  using Error::Error;
};

struct NotMultiplicativeBimodule : Error {
  using Error::Error;
};

struct NotAComplement : Error {
  using Error::Error;
};

struct InvalidDeformationMap : Error {
  using Error::Error;
};

struct UnknownEntry : Error {
  using Error::Error;
};

/* Classification aborts when some pair of candidates cannot be decided
 * either way; left/right are positions in the enumerated map list. */
struct UnresolvedPair : Error {
  std::size_t left;
  std::size_t right;
  UnresolvedPair(std::size_t l, std::size_t r, const std::string& why)
      : Error("cannot decide equivalence of maps #" + std::to_string(l) +
              " and #" + std::to_string(r) + ": " + why),
        left(l),
        right(r) {}
};

}  // namespace algfact
