#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "branch_audit/errors.hpp"
#include "branch_audit/interval.hpp"
#include "branch_audit/paper_fn.hpp"

namespace branch_audit {

enum class ExprKind { kNumber, kI, kPi, kLn2, kZ, kF, kCis, kNeg, kCall, kAdd, kSub, kMul, kDiv };
enum class UnaryFn { kConj, kLnn, kLnnn, kLnSlit, kExp, kSin, kCos, kAbs };
const char* to_string(UnaryFn fn);

/// Half-open source range [begin, end) as byte offsets plus the start
/// position.
struct Span {
  SourcePosition pos;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::kNumber;
  /// Nonnegative value of kNumber; t of cis(t) = e^{i pi t}.
  Rational value;
  UnaryFn fn = UnaryFn::kConj;
  ExprPtr lhs;
  ExprPtr rhs;
  Span span;
};

/// Grammar, lowest precedence first:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | atom
///   atom   := number | z | i | pi | ln2 | f | cis '(' ['-'] int ['/' int] ')'
///           | fn '(' expr ')' | '(' expr ')'
/// A quotient of two integer literals folds into one rational literal.
ExprPtr parse_expr(std::string_view src);

/// Minimal parentheses; non-integer literals print as "(p/q)".
std::string pretty(const Expr& e);

/// A failure while evaluating a sub-expression. kind() is the kind of the
/// underlying error.
class ExprEvalError : public Error {
 public:
  ExprEvalError(const Error& cause, Span span, std::string subexpr)
      : Error(cause.kind(), cause.kind() + " in '" + subexpr + "' at " + std::to_string(span.pos.line) + ":" +
                                std::to_string(span.pos.column) + ": " + cause.what()),
        span_(span),
        subexpr_(std::move(subexpr)) {}

  const Span& span() const noexcept { return span_; }
  const std::string& subexpr() const noexcept { return subexpr_; }

 private:
  Span span_;
  std::string subexpr_;
};

struct EvalResult {
  ComplexBox value;
  /// One line per certified branch domain, in evaluation order.
  std::vector<std::string> trail;
};

EvalResult evaluate(const Expr& e, const ComplexBox& z, FReading reading = FReading::kCaseEvaluation);

}  // namespace branch_audit
