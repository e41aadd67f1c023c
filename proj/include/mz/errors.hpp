#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mz {

// An eliminant has a square-free factor with no rational root: the input
// leaves the implemented exact field. Carries the offending factor,
// pretty-printed in default variable names.
class NonSplittingError : public std::runtime_error {
 public:
  NonSplittingError(std::string factor, int var)
      : std::runtime_error("polynomial does not split into linear factors over the rationals: " +
                           factor),
        factor_(std::move(factor)),
        var_(var) {}

  const std::string& factor() const { return factor_; }
  int variable() const { return var_; }

 private:
  std::string factor_;
  int var_;
};

class InfiniteCodimensionError : public std::runtime_error {
 public:
  explicit InfiniteCodimensionError(int var)
      : std::runtime_error("ideal has infinite codimension: no pure power of x" +
                           std::to_string(var + 1) + " among the leading terms"),
        var_(var) {}

  int variable() const { return var_; }

 private:
  int var_;
};

// Exponential subset enumeration refused; distinct from any verdict.
class SubsetBudgetExceeded : public std::runtime_error {
 public:
  SubsetBudgetExceeded(std::size_t size, std::size_t cap)
      : std::runtime_error("subset enumeration over " + std::to_string(size) +
                           " spectrum points exceeds the cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// The elementary matrix is provably invertible for valid spectra; hitting
// this means a bug or a violated precondition, never a property of the input.
class SingularMatrixError : public std::logic_error {
 public:
  SingularMatrixError() : std::logic_error("elementary functional matrix is singular") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " +
                           expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

// Malformed problem file (schema, variable list, option values).
class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mz
