#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace whcalc {

// Base class for every domain error; `kind` is a stable machine-readable tag
// that the CLI serializes into error JSON.
class CalcError : public std::runtime_error {
 public:
  CalcError(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class GradeMismatch : public CalcError {
 public:
  explicit GradeMismatch(const std::string& msg) : CalcError("grade_mismatch", msg) {}
};

class WellFormError : public CalcError {
 public:
  explicit WellFormError(const std::string& msg) : CalcError("ill_formed", msg) {}
};

// Raised by normalize when a bracket with provably overlapping supports
// survives expansion, or when the input is not a sum of generator brackets.
class NotInW : public CalcError {
 public:
  explicit NotInW(const std::string& msg) : CalcError("not_in_w", msg) {}
};

class UnorderableSupports : public CalcError {
 public:
  explicit UnorderableSupports(const std::string& msg)
      : CalcError("unorderable_supports", msg) {}
};

class WedgeMismatch : public CalcError {
 public:
  explicit WedgeMismatch(const std::string& msg) : CalcError("wedge_mismatch", msg) {}
};

class IndexError : public CalcError {
 public:
  explicit IndexError(const std::string& msg) : CalcError("index_error", msg) {}
};

// A valid expression left the affine sublanguage (e.g. an infinite-by-infinite
// bracket whose index families cannot be aligned by a constant shift).
class UnsupportedReindex : public CalcError {
 public:
  explicit UnsupportedReindex(const std::string& msg)
      : CalcError("unsupported_reindex", msg) {}
};

class ParseError : public CalcError {
 public:
  ParseError(int line, int col, std::string expected, const std::string& msg)
      : CalcError("parse_error", msg), line_(line), col_(col), expected_(std::move(expected)) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_, col_;
  std::string expected_;
};

}  // namespace whcalc
