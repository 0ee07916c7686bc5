#pragma once

#include "sextic/exact_lp.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

/// Reader/writer for the LP and MPS subsets described in docs/lp_dialect.md.
/// All numeric literals are converted to exact rationals.
namespace sextic::lp {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Integrality, SOS, quadratic and similar sections. Rejected rather than
/// skipped because skipping would silently change the problem.
class UnsupportedSection : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnknownRow : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnknownColumn : public FormatError {
 public:
  using FormatError::FormatError;
};

LpInstance parse_lp(std::string_view text);
LpInstance parse_mps(std::string_view text);

/// Every variable gets an explicit bound line (`free` included) so that the
/// file means the same thing to solvers with a different default.
std::string write_lp(const LpInstance& instance);

/// Order-insensitive comparison: same variable set, objective, bounds and
/// the same multiset of named constraints. Zero coefficients are ignored.
bool semantically_equal(const LpInstance& a, const LpInstance& b);

}  // namespace sextic::lp
