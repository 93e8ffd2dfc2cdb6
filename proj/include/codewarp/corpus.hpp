#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codewarp/dtw.hpp"
#include "codewarp/encode.hpp"

namespace codewarp {

// A set of programs encoded with one table at one level.
class Corpus {
 public:
  Corpus(int level, std::uint64_t table_fingerprint)
      : level_(level), fingerprint_(table_fingerprint) {}

  void add(CodeSequence seq) {
    if (seq.level != level_) throw std::invalid_argument("corpus entries must share one level");
    if (seq.table_fingerprint != fingerprint_)
      throw std::invalid_argument("corpus entries must share one encoding table");
    if (seq.source_id.empty()) throw std::invalid_argument("corpus entry id must be non-empty");
    if (index_.count(seq.source_id))
      throw std::invalid_argument("duplicate corpus id: " + seq.source_id);
    index_.emplace(seq.source_id, entries_.size());
    entries_.push_back(std::move(seq));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  int level() const noexcept { return level_; }
  std::uint64_t table_fingerprint() const noexcept { return fingerprint_; }

  const CodeSequence& at(std::size_t idx) const { return entries_.at(idx); }

  const CodeSequence& at(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw std::out_of_range("unknown corpus id: " + std::string(id));
    return entries_[it->second];
  }

  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.source_id);
    return out;
  }

 private:
  int level_;
  std::uint64_t fingerprint_;
  std::vector<CodeSequence> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Symmetric pairwise FDTW distances with a zero diagonal.
struct DistanceTable {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> d;

  std::size_t index_of(std::string_view id) const {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] == id) return k;
    }
    throw std::out_of_range("unknown id: " + std::string(id));
  }
};

// Each unordered pair is computed once and mirrored. With threads > 1 the
// pairs are spread over workers; results land in slots keyed by pair
// index, so the table is identical to a sequential run.
inline DistanceTable pairwise_distances(const Corpus& corpus, unsigned threads = 1,
                                        std::optional<std::size_t> window = std::nullopt) {
  if (corpus.size() == 0) throw std::invalid_argument("corpus must contain at least one entry");
  const std::size_t n = corpus.size();
  DistanceTable table;
  table.ids = corpus.ids();
  table.d.assign(n, std::vector<double>(n, 0.0));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }

  std::vector<double> results(pairs.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [a, b] = pairs[k];
      results[k] = dtw_distance(corpus.at(a).values, corpus.at(b).values, window);
    }
  };

  if (threads <= 1 || pairs.size() < 2) {
    run_range(0, pairs.size());
  } else {
    unsigned workers = threads < pairs.size() ? threads : static_cast<unsigned>(pairs.size());
    std::atomic<std::size_t> next{0};
    const std::size_t chunk = 16;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t begin = next.fetch_add(chunk);
          if (begin >= pairs.size()) return;
          std::size_t end = begin + chunk < pairs.size() ? begin + chunk : pairs.size();
          run_range(begin, end);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b] = pairs[k];
    table.d[a][b] = results[k];
    table.d[b][a] = results[k];
  }
  return table;
}

// (1 - d/d_max) * 100, truncated toward zero to two decimals. Truncation,
// not rounding: d = 12.80 against d_max = 499.35 must read 97.43. An
// infinite d reads 0; d_max = 0 means every corpus member matches the
// query exactly, which reads 100.
inline double similarity_percent(double d, double d_max) {
  if (std::isinf(d)) return 0.0;
  if (d_max == 0.0) return 100.0;
  double hundredths = std::floor((1.0 - d / d_max) * 10000.0);
  return hundredths / 100.0;
}

// Renders a similarity percentage with exactly two decimals.
inline std::string format_percent(double percent) {
  long long hundredths = std::llround(percent * 100.0);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", hundredths < 0 ? "-" : "",
                std::llabs(hundredths) / 100, std::llabs(hundredths) % 100);
  return buf;
}

struct Neighbor {
  std::string id;
  double distance = 0.0;
  double similarity = 0.0;
};

// Neighbors of a query, ascending by distance (ties by id). d_max is the
// largest finite distance in the query's column; infinite neighbors sort
// last and score 0.00.
struct RankedResult {
  std::string query_id;
  std::vector<Neighbor> neighbors;
  double d_max = 0.0;

  std::vector<std::string> top3() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < neighbors.size() && k < 3; ++k) out.push_back(neighbors[k].id);
    return out;
  }
};

inline RankedResult rank(std::string_view query_id, const DistanceTable& table) {
  std::size_t q = table.index_of(query_id);
  RankedResult result;
  result.query_id = std::string(query_id);

  double d_max = 0.0;
  bool any_finite = false, any_infinite = false;
  for (std::size_t k = 0; k < table.ids.size(); ++k) {
    if (k == q) continue;
    double d = table.d[q][k];
    if (std::isfinite(d)) {
      any_finite = true;
      if (d > d_max) d_max = d;
    } else {
      any_infinite = true;
    }
  }
  result.d_max = !any_finite && any_infinite ? kInfiniteDistance : d_max;

  for (std::size_t k = 0; k < table.ids.size(); ++k) {
    if (k == q) continue;
    double d = table.d[q][k];
    result.neighbors.push_back({table.ids[k], d, similarity_percent(d, result.d_max)});
  }
  std::sort(result.neighbors.begin(), result.neighbors.end(),
            [](const Neighbor& a, const Neighbor& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.id < b.id;
            });
  return result;
}

}  // namespace codewarp
