#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "codewarp/diagnostics.hpp"
#include "codewarp/encoding_table.hpp"
#include "codewarp/preprocess.hpp"

namespace codewarp {

enum class TokenKind { Operator, ReservedWord, Identifier, Literal, Punctuation, Other };

struct Token {
  TokenKind kind = TokenKind::Other;
  std::string text;
  Span span;
};

// Token grammar in use: which lexemes are operators, which identifiers are
// reserved words, and which line-leading word is a dependency directive.
// Derived from an EncodingTable so tokenization and encoding always agree.
struct LanguageProfile {
  std::string name = "csharp";
  std::string dependency_directive = "using";
  std::vector<std::string> symbol_operators;  // longest first
  std::unordered_set<std::string> word_operators;
  std::unordered_set<std::string> keywords;
};

inline LanguageProfile make_profile(const EncodingTable& table, std::string name = "csharp",
                                    std::string dependency_directive = "using") {
  LanguageProfile p;
  p.name = std::move(name);
  p.dependency_directive = std::move(dependency_directive);
  auto word_start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  for (const auto& cat : table.categories()) {
    for (const auto& op : cat.members) {
      if (word_start(op.lexeme[0])) p.word_operators.insert(op.lexeme);
      else p.symbol_operators.push_back(op.lexeme);
    }
  }
  std::sort(p.symbol_operators.begin(), p.symbol_operators.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  for (const auto& rw : table.reserved_words()) p.keywords.insert(rw.lexeme);
  return p;
}

inline LanguageProfile default_profile() { return make_profile(default_table()); }

namespace detail {

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
inline bool digit(char c) { return c >= '0' && c <= '9'; }
inline bool space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

}  // namespace detail

// Maximal-munch lexer over comment-stripped text. The longest matching
// operator lexeme wins (`>>=` before `>>` before `>`); string/char
// literals become single Literal tokens; identifiers on the profile's
// keyword list become ReservedWord tokens; word operators (`new`, `is`,
// `typeof`, ...) become Operator tokens. Token spans point at the
// original source through the stripping map.
inline std::vector<Token> tokenize(const StrippedText& src, const LanguageProfile& profile) {
  std::vector<Token> tokens;
  const std::string& text = src.text;
  const std::size_t n = text.size();
  std::size_t i = 0;

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    tokens.push_back(Token{kind, text.substr(begin, end - begin), src.span_at(begin, end - begin)});
  };

  while (i < n) {
    char c = text[i];
    if (detail::space(c)) {
      ++i;
      continue;
    }

    // words: identifiers, keywords, word operators; '@ident' is a C#
    // verbatim identifier and never a keyword
    if (detail::ident_start(c) || (c == '@' && i + 1 < n && detail::ident_start(text[i + 1]))) {
      std::size_t begin = i;
      bool verbatim = c == '@';
      if (verbatim) ++i;
      while (i < n && detail::ident_char(text[i])) ++i;
      std::string word = text.substr(begin, i - begin);
      if (!verbatim && profile.word_operators.count(word)) push(TokenKind::Operator, begin, i);
      else if (!verbatim && profile.keywords.count(word)) push(TokenKind::ReservedWord, begin, i);
      else push(TokenKind::Identifier, begin, i);
      continue;
    }

    // numeric literals, including hex, suffixes, and exponents
    if (detail::digit(c)) {
      std::size_t begin = i;
      bool hex = i + 1 < n && c == '0' && (text[i + 1] == 'x' || text[i + 1] == 'X');
      ++i;
      while (i < n) {
        char d = text[i];
        if (detail::ident_char(d) || d == '.') {
          ++i;
        } else if (!hex && (d == '+' || d == '-') && (text[i - 1] == 'e' || text[i - 1] == 'E')) {
          ++i;
        } else {
          break;
        }
      }
      push(TokenKind::Literal, begin, i);
      continue;
    }

    // string / char / verbatim string literals
    if (c == '"' || c == '\'' || (c == '@' && i + 1 < n && text[i + 1] == '"')) {
      std::size_t begin = i;
      bool verbatim = c == '@';
      if (verbatim) i += 2;
      else ++i;
      bool closed = false;
      char close = c == '\'' ? '\'' : '"';
      while (i < n) {
        char d = text[i];
        if (verbatim) {
          if (d == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              i += 2;
              continue;
            }
            ++i;
            closed = true;
            break;
          }
          ++i;
          continue;
        }
        if (d == '\\' && i + 1 < n) {
          i += 2;
          continue;
        }
        if (d == close) {
          ++i;
          closed = true;
          break;
        }
        if (d == '\n') break;
        ++i;
      }
      if (!closed) {
        throw LexError(close == '\'' ? "unterminated character literal" : "unterminated string literal",
                       src.span_at(begin, i - begin));
      }
      push(TokenKind::Literal, begin, i);
      continue;
    }

    // symbol operators, longest first
    bool matched = false;
    for (const auto& op : profile.symbol_operators) {
      if (op.size() <= n - i && text.compare(i, op.size(), op) == 0) {
        push(TokenKind::Operator, i, i + op.size());
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;

    unsigned char uc = static_cast<unsigned char>(c);
    push(uc < 0x80 && std::ispunct(uc) ? TokenKind::Punctuation : TokenKind::Other, i, i + 1);
    ++i;
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view text, const LanguageProfile& profile) {
  return tokenize(StrippedText::identity(text), profile);
}

// Replaces identifier lexemes with `ID` and literal lexemes with `LIT`.
// Kinds, order, and spans are untouched; spans still point at the
// original lexemes.
inline std::vector<Token> normalize(std::vector<Token> tokens) {
  for (auto& t : tokens) {
    if (t.kind == TokenKind::Identifier) t.text = "ID";
    else if (t.kind == TokenKind::Literal) t.text = "LIT";
  }
  return tokens;
}

}  // namespace codewarp
