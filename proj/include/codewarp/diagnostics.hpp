#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codewarp {

// Location of a lexeme inside the original (pre-stripping) source text.
// Lines and columns are 1-based; columns count bytes.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Lexical failure (unterminated literal, unterminated block comment,
// invalid UTF-8, lexeme missing from a custom table).
class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, Span span)
      : std::runtime_error(message + " at line " + std::to_string(span.line) +
                           ", column " + std::to_string(span.column)),
        span_(span) {}

  const Span& span() const noexcept { return span_; }

 private:
  Span span_;
};

// Encoding-table invariant violation. `rule()` names the failing rule.
class TableError : public std::runtime_error {
 public:
  explicit TableError(std::string rule, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? rule : rule + ": " + detail),
        rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

// Byte offset -> line/column lookup over a fixed text.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  // Span for the byte range [offset, offset + length).
  Span span_at(std::size_t offset, std::size_t length) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    std::size_t column = offset - line_starts_[line - 1] + 1;
    return Span{line, column, offset, length};
  }

  const std::vector<std::size_t>& line_starts() const noexcept { return line_starts_; }

 private:
  std::vector<std::size_t> line_starts_;
};

}  // namespace codewarp
