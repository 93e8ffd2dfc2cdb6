#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codewarp/diagnostics.hpp"

namespace codewarp {

// Source text after a stripping pass. `origin[k]` is the byte offset of
// `text[k]` in the original source, so token spans can point at the real
// file even after comments and directive lines are gone. `line_starts`
// belongs to the original source and doubles as the line-offset map.
struct StrippedText {
  std::string text;
  std::vector<std::size_t> origin;
  std::vector<std::size_t> line_starts;

  // Wraps untouched text (identity mapping). Useful for tests and for
  // tokenizing snippets that never had comments.
  static StrippedText identity(std::string_view src) {
    StrippedText out;
    out.text.assign(src);
    out.origin.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) out.origin[i] = i;
    out.line_starts = LineIndex(src).line_starts();
    return out;
  }

  Span span_at(std::size_t stripped_offset, std::size_t length) const {
    std::size_t off = stripped_offset < origin.size() ? origin[stripped_offset]
                                                      : (origin.empty() ? 0 : origin.back() + 1);
    auto it = std::upper_bound(line_starts.begin(), line_starts.end(), off);
    std::size_t line = static_cast<std::size_t>(it - line_starts.begin());
    return Span{line, off - line_starts[line - 1] + 1, off, length};
  }
};

inline bool valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t need;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      need = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      need = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      need = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + need >= text.size()) return false;  // missing continuation bytes
    for (std::size_t k = 1; k <= need; ++k) {
      unsigned char cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // reject overlong forms, surrogates, and out-of-range code points
    if ((need == 1 && cp < 0x80) || (need == 2 && cp < 0x800) ||
        (need == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += need + 1;
  }
  return true;
}

// Removes `//` line comments and non-nesting `/* */` block comments.
// String and character literal contents are never mistaken for comments.
// Newlines inside removed block comments are kept so original line
// numbers stay stable. Throws LexError on an unterminated block comment,
// naming its opening line.
inline StrippedText strip_comments(std::string_view src) {
  StrippedText out;
  out.text.reserve(src.size());
  out.origin.reserve(src.size());
  out.line_starts = LineIndex(src).line_starts();

  enum class State { Code, Str, VerbatimStr, Chr };
  State state = State::Code;

  auto emit = [&](std::size_t pos) {
    out.text.push_back(src[pos]);
    out.origin.push_back(pos);
  };

  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    char c = src[i];
    switch (state) {
      case State::Code: {
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
          i += 2;
          while (i < n && src[i] != '\n') ++i;
          break;  // the newline itself is emitted on the next round
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
          std::size_t open = i;
          i += 2;
          bool closed = false;
          while (i < n) {
            if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
              i += 2;
              closed = true;
              break;
            }
            if (src[i] == '\n') emit(i);
            ++i;
          }
          if (!closed) {
            LineIndex idx(src);
            throw LexError("unterminated block comment opened", idx.span_at(open, 2));
          }
          break;
        }
        if (c == '@' && i + 1 < n && src[i + 1] == '"') {
          emit(i);
          emit(i + 1);
          i += 2;
          state = State::VerbatimStr;
          break;
        }
        emit(i);
        if (c == '"') state = State::Str;
        else if (c == '\'') state = State::Chr;
        ++i;
        break;
      }
      case State::Str:
      case State::Chr: {
        emit(i);
        char close = state == State::Str ? '"' : '\'';
        if (c == '\\' && i + 1 < n) {
          emit(i + 1);
          i += 2;
          break;
        }
        if (c == close || c == '\n') state = State::Code;  // '\n': unterminated; the lexer reports it
        ++i;
        break;
      }
      case State::VerbatimStr: {
        emit(i);
        if (c == '"') {
          if (i + 1 < n && src[i + 1] == '"') {
            emit(i + 1);
            i += 2;
            break;
          }
          state = State::Code;
        }
        ++i;
        break;
      }
    }
  }
  return out;
}

// Drops every line whose first non-blank token is the dependency directive
// of the active profile (`using` for C#). A directive word followed by `(`
// on the same line is a using *statement* and the line is kept. Expects
// comments to be gone already. Line provenance survives through `origin`.
inline StrippedText strip_dependencies(const StrippedText& in, std::string_view directive = "using") {
  StrippedText out;
  out.text.reserve(in.text.size());
  out.origin.reserve(in.origin.size());
  out.line_starts = in.line_starts;

  auto is_word_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };

  const std::string& text = in.text;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t line_end = text.find('\n', i);
    std::size_t stop = line_end == std::string::npos ? text.size() : line_end + 1;

    std::size_t p = i;
    while (p < stop && (text[p] == ' ' || text[p] == '\t' || text[p] == '\r')) ++p;

    bool drop = false;
    if (!directive.empty() && p + directive.size() <= stop &&
        text.compare(p, directive.size(), directive) == 0) {
      std::size_t after = p + directive.size();
      bool own_word = after >= stop || !is_word_char(text[after]);
      if (own_word) {
        std::size_t q = after;
        while (q < stop && (text[q] == ' ' || text[q] == '\t')) ++q;
        drop = !(q < stop && text[q] == '(');
      }
    }

    if (!drop) {
      for (std::size_t k = i; k < stop; ++k) {
        out.text.push_back(text[k]);
        out.origin.push_back(in.origin[k]);
      }
    }
    i = stop;
  }
  return out;
}

// Convenience text-in/text-out forms.
inline std::string strip_comments_text(std::string_view src) { return strip_comments(src).text; }

inline std::string strip_dependencies_text(std::string_view src, std::string_view directive = "using") {
  return strip_dependencies(StrippedText::identity(src), directive).text;
}

}  // namespace codewarp
