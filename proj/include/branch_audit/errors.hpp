#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace branch_audit {

/// Root of every error raised by the engine. `kind()` is a stable
/// machine-readable name used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DivisionByZeroInterval : public Error {
 public:
  explicit DivisionByZeroInterval(const std::string& detail)
      : Error("DivisionByZeroInterval", "interval division by an interval containing zero: " + detail) {}
};

class DivisionByZeroBox : public Error {
 public:
  explicit DivisionByZeroBox(const std::string& detail)
      : Error("DivisionByZeroBox", "box division by a box whose modulus is not bounded away from zero: " + detail) {}
};

/// Real elementary function evaluated outside its domain.
class DomainError : public Error {
 public:
  DomainError(const std::string& function, const std::string& bound)
      : Error("DomainError", function + ": argument violates " + bound), function_(function), bound_(bound) {}

  const std::string& function() const noexcept { return function_; }
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string function_;
  std::string bound_;
};

class DegenerateBox : public Error {
 public:
  DegenerateBox() : Error("DegenerateBox", "cannot bisect a box of zero width") {}
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("ZeroInverse", "inverse of the zero element of a cyclotomic field") {}
};

class PrecisionUnattainable : public Error {
 public:
  explicit PrecisionUnattainable(const std::string& detail)
      : Error("PrecisionUnattainable", detail) {}
};

class ZeroModulus : public Error {
 public:
  explicit ZeroModulus(const std::string& detail)
      : Error("ZeroModulus", "modulus not certified nonzero: " + detail) {}
};

class BranchCutStraddle : public Error {
 public:
  explicit BranchCutStraddle(const std::string& detail)
      : Error("BranchCutStraddle", "box meets the cut of the principal argument from below: " + detail) {}
};

/// A branch or term certificate failed. `certificate` names the sign
/// condition that could not be proven, `where` names the branch or term.
class DomainViolation : public Error {
 public:
  DomainViolation(std::string where, std::string certificate, std::string enclosure)
      : Error("DomainViolation",
              where + ": certificate '" + certificate + "' failed on " + enclosure),
        where_(std::move(where)),
        certificate_(std::move(certificate)),
        enclosure_(std::move(enclosure)) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& certificate() const noexcept { return certificate_; }
  const std::string& enclosure() const noexcept { return enclosure_; }

 private:
  std::string where_;
  std::string certificate_;
  std::string enclosure_;
};

class AmbiguousCorrection : public Error {
 public:
  explicit AmbiguousCorrection(const std::string& detail)
      : Error("AmbiguousCorrection", "argument sum straddles +-pi: " + detail) {}
};

class CertificateInconclusive : public Error {
 public:
  explicit CertificateInconclusive(const std::string& box)
      : Error("CertificateInconclusive", "subdivision exhausted on " + box), box_(box) {}

  const std::string& box() const noexcept { return box_; }

 private:
  std::string box_;
};

class NonMonicInput : public Error {
 public:
  NonMonicInput() : Error("NonMonicInput", "polynomial is not monic and normalization is disabled") {}
};

class NonRationalCoefficients : public Error {
 public:
  NonRationalCoefficients()
      : Error("NonRationalCoefficients", "conjugate root check needs rational coefficients") {}
};

class NotARoot : public Error {
 public:
  explicit NotARoot(std::size_t index)
      : Error("NotARoot", "listed root #" + std::to_string(index) + " does not annihilate the current quotient"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourcePosition pos, std::vector<std::string> expected, const std::string& found)
      : Error("ParseError", format(pos, expected, found)), pos_(pos), expected_(std::move(expected)) {}

  SourcePosition position() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(SourcePosition pos, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string out = "parse error at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                      ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k != 0) out += k + 1 == expected.size() ? " or " : ", ";
      out += expected[k];
    }
    out += ", found " + found;
    return out;
  }

  SourcePosition pos_;
  std::vector<std::string> expected_;
};

}  // namespace branch_audit
