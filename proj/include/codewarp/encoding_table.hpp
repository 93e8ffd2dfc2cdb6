#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codewarp/diagnostics.hpp"

namespace codewarp {

struct OperatorInfo {
  std::string lexeme;
  double theta = 0.0;
};

// One operator category: its level-1 value phi and its members with their
// level-2 theta values, in listing order.
struct OperatorCategory {
  std::string name;
  double phi = 0.0;
  std::vector<OperatorInfo> members;
};

struct ReservedWord {
  std::string lexeme;
  double sigma = 0.0;
};

namespace detail {

inline std::string short_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline bool nearly_equal(double a, double b) { return std::fabs(a - b) <= 1e-9; }

}  // namespace detail

// The phi/theta/sigma value assignment. Construction validates every
// invariant and throws TableError naming the failing rule, so a live
// table is always sound.
class EncodingTable {
 public:
  EncodingTable(std::string version, std::vector<OperatorCategory> categories,
                std::vector<ReservedWord> reserved_words)
      : version_(std::move(version)),
        categories_(std::move(categories)),
        reserved_(std::move(reserved_words)) {
    validate();
    for (std::size_t k = 0; k < categories_.size(); ++k) {
      for (const auto& op : categories_[k].members) {
        theta_by_lexeme_.emplace(op.lexeme, op.theta);
        category_by_lexeme_.emplace(op.lexeme, k);
      }
    }
    for (const auto& rw : reserved_) sigma_by_lexeme_.emplace(rw.lexeme, rw.sigma);
  }

  const std::string& version() const noexcept { return version_; }
  const std::vector<OperatorCategory>& categories() const noexcept { return categories_; }
  const std::vector<ReservedWord>& reserved_words() const noexcept { return reserved_; }

  // The category owning an operator lexeme, or nullptr for non-operators.
  const OperatorCategory* category_of(std::string_view lexeme) const {
    auto it = category_by_lexeme_.find(std::string(lexeme));
    return it == category_by_lexeme_.end() ? nullptr : &categories_[it->second];
  }

  std::optional<double> theta(std::string_view lexeme) const {
    auto it = theta_by_lexeme_.find(std::string(lexeme));
    if (it == theta_by_lexeme_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<double> sigma(std::string_view lexeme) const {
    auto it = sigma_by_lexeme_.find(std::string(lexeme));
    if (it == sigma_by_lexeme_.end()) return std::nullopt;
    return it->second;
  }

  bool is_operator(std::string_view lexeme) const {
    return category_by_lexeme_.count(std::string(lexeme)) != 0;
  }

  bool is_reserved_word(std::string_view lexeme) const {
    return sigma_by_lexeme_.count(std::string(lexeme)) != 0;
  }

  // Spacing between adjacent category phi values; 0 with fewer than two
  // categories (band checks are vacuous then).
  double phi_spacing() const noexcept {
    return categories_.size() < 2 ? 0.0 : categories_[1].phi - categories_[0].phi;
  }

  // FNV-1a over a canonical rendering; identifies the table in corpora.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::string_view s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      h ^= 0x1F;
      h *= 1099511628211ULL;
    };
    mix(version_);
    for (const auto& cat : categories_) {
      mix(cat.name);
      mix(detail::short_double(cat.phi));
      for (const auto& op : cat.members) {
        mix(op.lexeme);
        mix(detail::short_double(op.theta));
      }
    }
    for (const auto& rw : reserved_) {
      mix(rw.lexeme);
      mix(detail::short_double(rw.sigma));
    }
    return h;
  }

 private:
  void validate() const {
    std::set<std::string> names;
    std::set<std::string> op_lexemes;
    std::set<double> phis, thetas, sigmas;

    for (const auto& cat : categories_) {
      if (cat.name.empty() || !names.insert(cat.name).second)
        throw TableError("category names must be non-empty and unique", cat.name);
      if (cat.members.empty())
        throw TableError("category members must be non-empty", cat.name);
      if (!phis.insert(cat.phi).second)
        throw TableError("phi values must be pairwise distinct",
                         cat.name + " reuses phi " + detail::short_double(cat.phi));
      for (const auto& op : cat.members) {
        if (!op_lexemes.insert(op.lexeme).second)
          throw TableError("operator lexeme must appear in exactly one category", op.lexeme);
        if (!thetas.insert(op.theta).second)
          throw TableError("theta values must be pairwise distinct",
                           op.lexeme + " reuses theta " + detail::short_double(op.theta));
      }
    }
    std::set<std::string> words;
    for (const auto& rw : reserved_) {
      if (!words.insert(rw.lexeme).second)
        throw TableError("reserved word lexemes must be duplicate-free", rw.lexeme);
      if (!sigmas.insert(rw.sigma).second)
        throw TableError("sigma values must be pairwise distinct",
                         rw.lexeme + " reuses sigma " + detail::short_double(rw.sigma));
    }

    for (double v : phis) {
      if (thetas.count(v) || sigmas.count(v))
        throw TableError("phi, theta, and sigma value sets must be pairwise disjoint",
                         detail::short_double(v));
    }
    for (double v : thetas) {
      if (sigmas.count(v))
        throw TableError("phi, theta, and sigma value sets must be pairwise disjoint",
                         detail::short_double(v));
    }

    if (categories_.size() >= 2) {
      double spacing = categories_[1].phi - categories_[0].phi;
      if (detail::nearly_equal(spacing, 0.0))
        throw TableError("consecutive category phi values must be equally spaced",
                         "zero spacing");
      for (std::size_t k = 2; k < categories_.size(); ++k) {
        double d = categories_[k].phi - categories_[k - 1].phi;
        if (!detail::nearly_equal(d, spacing))
          throw TableError("consecutive category phi values must be equally spaced",
                           categories_[k].name);
      }
      double half_band = std::fabs(spacing) / 2.0;
      for (const auto& cat : categories_) {
        for (const auto& op : cat.members) {
          if (!(std::fabs(op.theta - cat.phi) < half_band))
            throw TableError(
                "theta values must stay within half a phi spacing of their category phi",
                op.lexeme);
        }
      }
    }
    for (const auto& cat : categories_) {
      if (cat.members.size() < 3) continue;
      double step = cat.members[1].theta - cat.members[0].theta;
      for (std::size_t j = 2; j < cat.members.size(); ++j) {
        double d = cat.members[j].theta - cat.members[j - 1].theta;
        if (!detail::nearly_equal(d, step))
          throw TableError("consecutive theta values within a category must be equally spaced",
                           cat.name + " at " + cat.members[j].lexeme);
      }
    }
  }

  std::string version_;
  std::vector<OperatorCategory> categories_;
  std::vector<ReservedWord> reserved_;
  std::unordered_map<std::string, double> theta_by_lexeme_;
  std::unordered_map<std::string, double> sigma_by_lexeme_;
  std::unordered_map<std::string, std::size_t> category_by_lexeme_;
};

// The canonical C# table. Category k (1-based, Fig. 3 order) gets
// phi = 100k; the j-th member of category k gets theta = 100k + j; the
// r-th reserved word (alphabetical, minus the lexemes the categories
// already claim) gets sigma = 2000 + 10r. `[` and `(` carry the Indexing
// and Cast values; closers emit nothing.
inline EncodingTable default_table() {
  static const std::vector<std::pair<const char*, std::vector<const char*>>> kCategories = {
      {"Arithmetic", {"+", "-", "*", "/", "%"}},
      {"Logical", {"&", "^", "!", "~", "&&", "true", "false", "|", "||"}},
      {"IncrementDecrement", {"++", "--"}},
      {"Shift", {"<<", ">>"}},
      {"Relational", {"==", "!=", "<", ">", "<=", ">="}},
      {"Assignment", {"=", "+=", "-=", "*=", "/=", "%=", "&=", "^=", "<<=", ">>=", "|="}},
      {"Indexing", {"["}},
      {"Cast", {"("}},
      {"ObjectCreation", {"new"}},
      {"TypeInformation", {"as", "is", "sizeof", "typeof"}},
      {"ErrorControl", {"checked", "unchecked"}},
  };
  // C# 2.0 reserved words minus the nine claimed above as operators.
  static const std::vector<const char*> kReserved = {
      "abstract", "base",      "bool",     "break",    "byte",      "case",     "catch",
      "char",     "class",     "const",    "continue", "decimal",   "default",  "delegate",
      "do",       "double",    "else",     "enum",     "event",     "explicit", "extern",
      "finally",  "fixed",     "float",    "for",      "foreach",   "goto",     "if",
      "implicit", "in",        "int",      "interface", "internal", "lock",     "long",
      "namespace", "null",     "object",   "operator", "out",       "override", "params",
      "private",  "protected", "public",   "readonly", "ref",       "return",   "sbyte",
      "sealed",   "short",     "stackalloc", "static", "string",    "struct",   "switch",
      "this",     "throw",     "try",      "uint",     "ulong",     "unsafe",   "ushort",
      "using",    "virtual",   "void",     "volatile", "while",
  };

  std::vector<OperatorCategory> categories;
  categories.reserve(kCategories.size());
  for (std::size_t k = 0; k < kCategories.size(); ++k) {
    OperatorCategory cat;
    cat.name = kCategories[k].first;
    cat.phi = 100.0 * static_cast<double>(k + 1);
    for (std::size_t j = 0; j < kCategories[k].second.size(); ++j) {
      cat.members.push_back({kCategories[k].second[j], cat.phi + static_cast<double>(j + 1)});
    }
    categories.push_back(std::move(cat));
  }

  std::vector<ReservedWord> reserved;
  reserved.reserve(kReserved.size());
  for (std::size_t r = 0; r < kReserved.size(); ++r) {
    reserved.push_back({kReserved[r], 2000.0 + 10.0 * static_cast<double>(r + 1)});
  }
  return EncodingTable("1", std::move(categories), std::move(reserved));
}

}  // namespace codewarp
