#include "branch_audit/expr.hpp"

#include <array>
#include <optional>
#include <utility>

#include "branch_audit/branches.hpp"
#include "branch_audit/cyclotomic.hpp"
#include "lexer.hpp"

namespace branch_audit {

namespace {

using detail::Token;
using detail::TokKind;

constexpr std::array<std::pair<const char*, UnaryFn>, 8> kFunctions{{
    {"conj", UnaryFn::kConj},
    {"Lnn", UnaryFn::kLnn},
    {"Lnnn", UnaryFn::kLnnn},
    {"LnSlit", UnaryFn::kLnSlit},
    {"exp", UnaryFn::kExp},
    {"sin", UnaryFn::kSin},
    {"cos", UnaryFn::kCos},
    {"abs", UnaryFn::kAbs},
}};

std::optional<UnaryFn> lookup_function(const std::string& name) {
  for (const auto& [n, fn] : kFunctions) {
    if (name == n) return fn;
  }
  return std::nullopt;
}

std::shared_ptr<Expr> make(ExprKind kind, const Token& at) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->span = {at.pos, at.offset, at.end_offset()};
  return e;
}

bool is_integer_literal(const Expr& e) { return e.kind == ExprKind::kNumber && e.value.get_den() == 1; }

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(detail::tokenize(src, "+-*/(),")) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != TokKind::kEnd) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at_punct(char c) const { return peek().kind == TokKind::kPunct && peek().text[0] == c; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), peek().describe());
  }

  void expect_punct(char c, std::vector<std::string> expected) {
    if (!at_punct(c)) fail(std::move(expected));
    take();
  }

  static ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->span = {a->span.pos, a->span.begin, b->span.end};
    if (kind == ExprKind::kDiv && is_integer_literal(*a) && is_integer_literal(*b) && b->value != 0) {
      e->kind = ExprKind::kNumber;
      e->value = a->value / b->value;
      return e;
    }
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_punct('+') || at_punct('-')) {
      const ExprKind kind = take().text[0] == '+' ? ExprKind::kAdd : ExprKind::kSub;
      e = binary(kind, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (at_punct('*') || at_punct('/')) {
      const ExprKind kind = take().text[0] == '*' ? ExprKind::kMul : ExprKind::kDiv;
      e = binary(kind, e, unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (at_punct('-')) {
      auto e = make(ExprKind::kNeg, take());
      e->lhs = unary();
      e->span.end = e->lhs->span.end;
      return e;
    }
    return atom();
  }

  Rational integer(std::vector<std::string> expected) {
    if (peek().kind != TokKind::kNumber || peek().text.find('.') != std::string::npos) fail(std::move(expected));
    return Rational(mpz_class(take().text));
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == TokKind::kNumber) {
      auto e = make(ExprKind::kNumber, take());
      e->value = detail::decimal_value(t.text);
      return e;
    }
    if (at_punct('(')) {
      const Token& open = take();
      ExprPtr inner = expr();
      const Token& close = peek();
      expect_punct(')', {"operator", "')'"});
      auto e = std::make_shared<Expr>(*inner);
      e->span = {open.pos, open.offset, close.end_offset()};
      return e;
    }
    if (t.kind != TokKind::kIdent) fail({"expression"});
    const Token& name = take();
    if (name.text == "z") return make(ExprKind::kZ, name);
    if (name.text == "i") return make(ExprKind::kI, name);
    if (name.text == "pi") return make(ExprKind::kPi, name);
    if (name.text == "ln2") return make(ExprKind::kLn2, name);
    if (name.text == "f") return make(ExprKind::kF, name);
    if (name.text == "cis") {
      auto e = make(ExprKind::kCis, name);
      expect_punct('(', {"'('"});
      bool negative = false;
      if (at_punct('-')) {
        take();
        negative = true;
      }
      Rational num = integer({"integer"});
      Rational den(1);
      if (at_punct('/')) {
        take();
        den = integer({"integer"});
        if (den == 0) throw ParseError(toks_[pos_ - 1].pos, {"nonzero denominator"}, "0");
      }
      const Token& close = peek();
      expect_punct(')', {"'/'", "')'"});
      e->value = num / den;
      if (negative) e->value = -e->value;
      e->span.end = close.end_offset();
      return e;
    }
    if (const auto fn = lookup_function(name.text)) {
      auto e = make(ExprKind::kCall, name);
      e->fn = *fn;
      expect_punct('(', {"'('"});
      e->lhs = expr();
      const Token& close = peek();
      expect_punct(')', {"operator", "')'"});
      e->span.end = close.end_offset();
      return e;
    }
    pos_--;
    fail({"expression"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kAdd:
    case ExprKind::kSub: return 1;
    case ExprKind::kMul:
    case ExprKind::kDiv: return 2;
    case ExprKind::kNeg: return 3;
    default: return 4;
  }
}

void print_number(const Rational& q, std::string& out) {
  if (q.get_den() == 1) {
    out += q.get_str();
  } else {
    out += "(" + q.get_str() + ")";
  }
}

// Integer-literal quotients print folded, matching what the parser builds.
bool foldable(const Expr& e) {
  return e.kind == ExprKind::kDiv && is_integer_literal(*e.lhs) && is_integer_literal(*e.rhs) && e.rhs->value != 0;
}

void print(const Expr& e, int min_prec, std::string& out) {
  if (foldable(e)) {
    print_number(Rational(e.lhs->value / e.rhs->value), out);
    return;
  }
  const bool wrap = precedence(e) < min_prec;
  if (wrap) out += '(';
  switch (e.kind) {
    case ExprKind::kNumber: print_number(e.value, out); break;
    case ExprKind::kI: out += "i"; break;
    case ExprKind::kPi: out += "pi"; break;
    case ExprKind::kLn2: out += "ln2"; break;
    case ExprKind::kZ: out += "z"; break;
    case ExprKind::kF: out += "f"; break;
    case ExprKind::kCis: out += "cis(" + e.value.get_str() + ")"; break;
    case ExprKind::kNeg:
      out += '-';
      print(*e.lhs, 3, out);
      break;
    case ExprKind::kCall:
      out += to_string(e.fn);
      out += '(';
      print(*e.lhs, 0, out);
      out += ')';
      break;
    case ExprKind::kAdd:
    case ExprKind::kSub:
    case ExprKind::kMul:
    case ExprKind::kDiv: {
      const int p = precedence(e);
      static const char* const ops[] = {" + ", " - ", " * ", " / "};
      print(*e.lhs, p, out);
      out += ops[static_cast<int>(e.kind) - static_cast<int>(ExprKind::kAdd)];
      print(*e.rhs, p + 1, out);
      break;
    }
  }
  if (wrap) out += ')';
}

class Evaluator {
 public:
  Evaluator(const ComplexBox& z, FReading reading) : z_(z), reading_(reading) {}

  ComplexBox eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (const ExprEvalError&) {
      throw;
    } catch (const Error& err) {
      throw ExprEvalError(err, e.span, pretty(e));
    }
  }

  std::vector<std::string> trail;

 private:
  void certify(const Expr& e, const char* what) {
    trail.push_back(std::string(what) + " certified for '" + pretty(e) + "' at " + std::to_string(e.span.pos.line) +
                    ":" + std::to_string(e.span.pos.column));
  }

  ComplexBox eval_node(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kNumber: {
        return {RealInterval::from_rational(e.value), RealInterval(0.0)};
      }
      case ExprKind::kI: return ComplexBox::point(0.0, 1.0);
      case ExprKind::kPi: return {constants::pi(), RealInterval(0.0)};
      case ExprKind::kLn2: return {constants::ln2(), RealInterval(0.0)};
      case ExprKind::kZ: return z_;
      case ExprKind::kCis: return cis_pi(e.value);
      case ExprKind::kF: {
        const ComplexBox v = eval_f(z_, reading_);
        certify(e, "f: F1, F2, F3 (Lnn: Re > 0), Lnnn (Re z < 0), LnSlit (z off [0, inf))");
        return v;
      }
      case ExprKind::kNeg: return -eval(*e.lhs);
      case ExprKind::kAdd: return eval(*e.lhs) + eval(*e.rhs);
      case ExprKind::kSub: return eval(*e.lhs) - eval(*e.rhs);
      case ExprKind::kMul: return eval(*e.lhs) * eval(*e.rhs);
      case ExprKind::kDiv: {
        const ComplexBox a = eval(*e.lhs);
        const ComplexBox b = eval(*e.rhs);
        const ComplexBox q = a / b;
        certify(e, "divisor modulus > 0");
        return q;
      }
      case ExprKind::kCall: {
        const ComplexBox a = eval(*e.lhs);
        switch (e.fn) {
          case UnaryFn::kConj: return conj(a);
          case UnaryFn::kExp: return cexp(a);
          case UnaryFn::kSin: return csin(a);
          case UnaryFn::kCos: return ccos(a);
          case UnaryFn::kAbs: return {box_abs(a), RealInterval(0.0)};
          case UnaryFn::kLnn: {
            const ComplexBox v = branch_log(BranchTag::kLnn, a);
            certify(e, "Lnn: Re > 0");
            return v;
          }
          case UnaryFn::kLnnn: {
            const ComplexBox v = branch_log(BranchTag::kLnnn, a);
            certify(e, "Lnnn: Re < 0");
            return v;
          }
          case UnaryFn::kLnSlit: {
            const ComplexBox v = branch_log(BranchTag::kLnSlit, a);
            certify(e, "LnSlit: off [0, inf)");
            return v;
          }
        }
      }
    }
    return {};
  }

  ComplexBox z_;
  FReading reading_;
};

}  // namespace

const char* to_string(UnaryFn fn) {
  for (const auto& [n, f] : kFunctions) {
    if (f == fn) return n;
  }
  return "?";
}

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string pretty(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

EvalResult evaluate(const Expr& e, const ComplexBox& z, FReading reading) {
  Evaluator ev(z, reading);
  EvalResult out;
  out.value = ev.eval(e);
  out.trail = std::move(ev.trail);
  return out;
}

}  // namespace branch_audit
