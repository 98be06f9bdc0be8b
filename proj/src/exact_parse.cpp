#include "branch_audit/exact_parse.hpp"

#include "lexer.hpp"

namespace branch_audit {

namespace {

using detail::Token;
using detail::TokKind;

Poly constant(const CycNum& c) { return Poly({c}); }

CycNum constant_value(const Poly& p) {
  if (p.is_zero()) return CycNum();
  return p.coefficient(0);
}

class ExactParser {
 public:
  ExactParser(std::string_view src, bool allow_z) : toks_(detail::tokenize(src, "+-*/^(),[]")), allow_z_(allow_z) {}

  Poly whole() {
    Poly p = sum();
    expect_end();
    return p;
  }

  std::vector<CycNum> list() {
    std::vector<CycNum> out;
    const bool bracket = at('[');
    if (bracket) take();
    if (bracket && at(']')) {
      take();
      expect_end();
      return out;
    }
    while (true) {
      out.push_back(scalar_of(sum()));
      if (at(',')) {
        take();
        continue;
      }
      break;
    }
    if (bracket) expect(']', {"','", "']'"});
    expect_end();
    return out;
  }

  CycNum scalar_of(const Poly& p) const {
    if (p.degree() > 0) throw Error("InvalidArgument", "expected a constant, got " + to_string(p));
    return constant_value(p);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at(char c) const { return peek().kind == TokKind::kPunct && peek().text[0] == c; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), peek().describe());
  }
  void expect(char c, std::vector<std::string> expected) {
    if (!at(c)) fail(std::move(expected));
    take();
  }
  void expect_end() {
    if (peek().kind != TokKind::kEnd) fail({"operator", "end of input"});
  }

  bool starts_primary() const {
    return peek().kind == TokKind::kNumber || peek().kind == TokKind::kIdent || at('(');
  }

  Poly sum() {
    Poly acc = signed_product();
    while (at('+') || at('-')) {
      const bool plus = take().text[0] == '+';
      const Poly rhs = signed_product();
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly signed_product() {
    if (at('-')) {
      take();
      return constant(CycNum(Rational(-1))) * signed_product();
    }
    if (at('+')) {
      take();
      return signed_product();
    }
    return product();
  }

  Poly product() {
    Poly acc = power();
    while (true) {
      if (at('*')) {
        take();
        acc = acc * power();
      } else if (at('/')) {
        const Token& slash = take();
        const Poly d = power();
        if (d.degree() > 0) throw ParseError(slash.pos, {"constant divisor"}, to_string(d));
        if (d.is_zero()) throw ParseError(slash.pos, {"nonzero divisor"}, "0");
        const CycNum inv = constant_value(d).inv();
        acc = acc * constant(inv);
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  long small_integer(std::vector<std::string> expected) {
    if (peek().kind != TokKind::kNumber || peek().text.find('.') != std::string::npos ||
        peek().text.size() > 9) {
      fail(std::move(expected));
    }
    return std::stol(take().text);
  }

  Poly power() {
    Poly base = primary();
    if (!at('^')) return base;
    take();
    const long e = small_integer({"nonnegative integer exponent"});
    Poly out = constant(CycNum(Rational(1)));
    for (long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Poly primary() {
    if (peek().kind == TokKind::kNumber) return constant(CycNum(detail::decimal_value(take().text)));
    if (at('(')) {
      take();
      Poly inner = sum();
      expect(')', {"operator", "')'"});
      return inner;
    }
    if (peek().kind != TokKind::kIdent) fail({"expression"});
    const std::string name = peek().text;
    if (name == "i") {
      take();
      return constant(cyc_root_of_unity(4, 1));
    }
    if (name == "z" && allow_z_) {
      take();
      return Poly({CycNum(), CycNum(Rational(1))});
    }
    if (name == "zeta") {
      take();
      expect('(', {"'('"});
      const long m = small_integer({"order"});
      if (m < 1) throw ParseError(toks_[pos_ - 1].pos, {"order >= 1"}, std::to_string(m));
      expect(',', {"','"});
      bool negative = false;
      if (at('-')) {
        take();
        negative = true;
      }
      const long k = small_integer({"exponent"});
      expect(')', {"')'"});
      return constant(cyc_root_of_unity(static_cast<unsigned>(m), negative ? -k : k));
    }
    if (name == "cis") {
      take();
      expect('(', {"'('"});
      bool negative = false;
      if (at('-')) {
        take();
        negative = true;
      }
      long p = small_integer({"integer"});
      long q = 1;
      if (at('/')) {
        take();
        q = small_integer({"integer"});
        if (q == 0) throw ParseError(toks_[pos_ - 1].pos, {"nonzero denominator"}, "0");
      }
      expect(')', {"'/'", "')'"});
      if (negative) p = -p;
      // e^{i pi p/q} = zeta_{2q}^p
      return constant(cyc_root_of_unity(static_cast<unsigned>(2 * q), p));
    }
    fail({"expression"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_z_;
};

}  // namespace

Poly parse_poly(std::string_view src) { return ExactParser(src, true).whole(); }

CycNum parse_exact_scalar(std::string_view src) {
  ExactParser parser(src, false);
  return parser.scalar_of(parser.whole());
}

std::vector<CycNum> parse_scalar_list(std::string_view src) { return ExactParser(src, false).list(); }

}  // namespace branch_audit
