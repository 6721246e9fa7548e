#pragma once

#include <stdexcept>
#include <string>

namespace sosv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed models, mismatched universes, violated preconditions.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Lowering a program to SDP data failed (e.g. uncovered monomial).
class CompileError : public Error {
 public:
  using Error::Error;
};

// Numerical solver breakdown that is not an infeasibility verdict.
class SolveError : public Error {
 public:
  using Error::Error;
};

// Extraction requested from a non-feasible solution.
class ExtractError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sosv
