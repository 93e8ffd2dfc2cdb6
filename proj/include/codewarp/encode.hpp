#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codewarp/diagnostics.hpp"
#include "codewarp/encoding_table.hpp"
#include "codewarp/lexer.hpp"
#include "codewarp/preprocess.hpp"

namespace codewarp {

// One program to analyze. `id` must be non-empty and unique within a
// corpus; `text` must be valid UTF-8 (checked here, at ingestion).
struct SourceUnit {
  std::string id;
  std::string text;
  std::string language_profile = "csharp";

  SourceUnit(std::string id_, std::string text_, std::string profile_ = "csharp")
      : id(std::move(id_)), text(std::move(text_)), language_profile(std::move(profile_)) {
    if (id.empty()) throw std::invalid_argument("source unit id must be non-empty");
    if (!valid_utf8(text)) throw LexError("source text is not valid UTF-8", Span{});
  }
};

struct Provenance {
  std::string lexeme;
  Span span;
};

// The real-valued sequence a program turns into. Level 1 holds one
// category value phi per operator occurrence; level 2 holds theta per
// operator interleaved with sigma per reserved word, in token order.
struct CodeSequence {
  std::vector<double> values;
  std::vector<Provenance> provenance;
  int level = 1;
  std::string source_id;
  std::uint64_t table_fingerprint = 0;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
};

// Emits the sequence for an already-normalized token stream. Tokens other
// than operators (and, at level 2, reserved words) contribute nothing.
inline CodeSequence encode(const std::vector<Token>& tokens, const EncodingTable& table,
                           int level, std::string source_id = "") {
  if (level != 1 && level != 2) throw std::invalid_argument("encoding level must be 1 or 2");
  CodeSequence seq;
  seq.level = level;
  seq.source_id = std::move(source_id);
  seq.table_fingerprint = table.fingerprint();
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Operator) {
      const OperatorCategory* cat = table.category_of(t.text);
      if (cat == nullptr)
        throw LexError("operator lexeme missing from encoding table: " + t.text, t.span);
      if (level == 1) {
        seq.values.push_back(cat->phi);
      } else {
        seq.values.push_back(*table.theta(t.text));
      }
      seq.provenance.push_back({t.text, t.span});
    } else if (level == 2 && t.kind == TokenKind::ReservedWord) {
      auto s = table.sigma(t.text);
      if (!s) throw LexError("reserved word missing from encoding table: " + t.text, t.span);
      seq.values.push_back(*s);
      seq.provenance.push_back({t.text, t.span});
    }
  }
  return seq;
}

// Post-preprocessing text with identifiers and literals replaced by their
// ID/LIT placeholders, for human inspection. The placeholders never reach
// a sequence; they exist only in this dump.
inline std::string normalized_source(const StrippedText& stripped,
                                     const LanguageProfile& profile) {
  auto tokens = tokenize(StrippedText::identity(stripped.text), profile);
  std::string out = stripped.text;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    if (it->kind == TokenKind::Identifier) out.replace(it->span.offset, it->span.length, "ID");
    else if (it->kind == TokenKind::Literal) out.replace(it->span.offset, it->span.length, "LIT");
  }
  return out;
}

// Whole pipeline for one source unit: strip comments, drop dependency
// directives, tokenize, normalize identifiers/literals, encode. Build one
// per table and reuse it across a corpus.
class Encoder {
 public:
  explicit Encoder(EncodingTable table, std::string profile_name = "csharp",
                   std::string dependency_directive = "using")
      : table_(std::move(table)),
        profile_(make_profile(table_, std::move(profile_name), std::move(dependency_directive))) {}

  const EncodingTable& table() const noexcept { return table_; }
  const LanguageProfile& profile() const noexcept { return profile_; }

  StrippedText preprocess(const SourceUnit& unit) const {
    return strip_dependencies(strip_comments(unit.text), profile_.dependency_directive);
  }

  std::vector<Token> lex(const SourceUnit& unit) const {
    return normalize(tokenize(preprocess(unit), profile_));
  }

  CodeSequence encode(const SourceUnit& unit, int level) const {
    return codewarp::encode(lex(unit), table_, level, unit.id);
  }

 private:
  EncodingTable table_;
  LanguageProfile profile_;
};

}  // namespace codewarp
