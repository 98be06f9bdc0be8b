#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "branch_audit/errors.hpp"

namespace branch_audit::detail {

enum class TokKind { kNumber, kIdent, kPunct, kEnd };

struct Token {
  TokKind kind = TokKind::kEnd;
  std::string text;
  SourcePosition pos;
  std::size_t offset = 0;

  std::size_t end_offset() const { return offset + text.size(); }
  std::string describe() const {
    switch (kind) {
      case TokKind::kEnd: return "end of input";
      case TokKind::kNumber: return "number '" + text + "'";
      case TokKind::kIdent: return "identifier '" + text + "'";
      case TokKind::kPunct: return "'" + text + "'";
    }
    return text;
  }
};

// Numbers are digits with an optional fraction part; everything else that
// is not a letter, digit or space is a one-character punctuator.
inline std::vector<Token> tokenize(std::string_view src, std::string_view punctuators) {
  std::vector<Token> out;
  SourcePosition pos;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++k) {
      if (src[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (k < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[k]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    t.offset = k;
    std::size_t len = 1;
    if (std::isdigit(c)) {
      t.kind = TokKind::kNumber;
      while (k + len < src.size() && std::isdigit(static_cast<unsigned char>(src[k + len]))) ++len;
      if (k + len + 1 < src.size() && src[k + len] == '.' &&
          std::isdigit(static_cast<unsigned char>(src[k + len + 1]))) {
        ++len;
        while (k + len < src.size() && std::isdigit(static_cast<unsigned char>(src[k + len]))) ++len;
      }
    } else if (std::isalpha(c) || c == '_') {
      t.kind = TokKind::kIdent;
      while (k + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[k + len])) || src[k + len] == '_')) {
        ++len;
      }
    } else if (punctuators.find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = TokKind::kPunct;
    } else {
      std::string shown(1, static_cast<char>(c));
      throw ParseError(pos, {"expression"}, "unexpected character '" + shown + "'");
    }
    t.text = std::string(src.substr(k, len));
    out.push_back(std::move(t));
    advance(len);
  }
  Token end;
  end.pos = pos;
  end.offset = src.size();
  out.push_back(std::move(end));
  return out;
}

// "12.25" -> 49/4
inline mpq_class decimal_value(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(text, 10));
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return q;
}

}  // namespace branch_audit::detail
