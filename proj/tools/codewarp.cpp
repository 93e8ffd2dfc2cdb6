// codewarp CLI: encode one file into its value sequence, compare two
// files (distance + similar fragments), or analyze a whole directory
// (distance table / similarity ranking).

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "codewarp/codewarp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // usage / IO errors
constexpr int kExitLex = 2;    // lex / encode failures

struct RunConfig {
  int level = 1;
  std::string table_path;
  std::size_t min_run = 5;
  double max_dev = codewarp::kInfiniteDistance;
  std::optional<std::size_t> window;
  std::string format = "text";
  bool with_spans = false;
  bool recursive = false;
  bool refine = false;
  double refine_threshold = 0.05;
};

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json distance_to_json(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

std::string read_file(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw std::runtime_error("not a regular file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

codewarp::EncodingTable resolve_table(const RunConfig& cfg) {
  if (cfg.table_path.empty()) return codewarp::default_table();
  return codewarp::load_table(cfg.table_path);
}

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

int cmd_encode(const std::string& file, const RunConfig& cfg, bool normalized) {
  auto encoder = codewarp::Encoder(resolve_table(cfg));
  codewarp::SourceUnit unit(fs::path(file).stem().string(), read_file(file));
  if (normalized) {
    std::cout << codewarp::normalized_source(encoder.preprocess(unit), encoder.profile());
    return kExitOk;
  }
  auto seq = encoder.encode(unit, cfg.level);
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    std::cout << fmt_double(seq.values[k]);
    if (cfg.with_spans) {
      const auto& span = seq.provenance[k].span;
      std::cout << '\t' << span.line << ':' << span.column;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareReport {
  double distance = 0.0;
  std::size_t path_length = 0;
  std::vector<codewarp::SubsequenceMatch> matches;
};

CompareReport run_compare(const codewarp::CodeSequence& a, const codewarp::CodeSequence& b,
                          const RunConfig& cfg) {
  CompareReport report;
  report.distance = codewarp::dtw_distance(a.values, b.values, cfg.window);
  if (a.empty() || b.empty() || !std::isfinite(report.distance)) return report;

  auto matrix = codewarp::dtw_matrix(a.values, b.values, cfg.window);
  auto path = codewarp::warp_path(matrix);
  report.path_length = path.length();

  codewarp::MatchParams params;
  params.min_run_length = cfg.min_run;
  params.max_deviation = cfg.max_dev;
  for (auto& m : codewarp::detect_matches(path, a.values, b.values, params)) {
    report.matches.push_back(codewarp::map_to_source(m, a.provenance, b.provenance));
  }
  return report;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, const RunConfig& cfg,
                bool dump_matrix, bool dump_path) {
  auto encoder = codewarp::Encoder(resolve_table(cfg));
  codewarp::SourceUnit unit_a(fs::path(file_a).stem().string(), read_file(file_a));
  codewarp::SourceUnit unit_b(fs::path(file_b).stem().string(), read_file(file_b));
  auto seq_a = encoder.encode(unit_a, cfg.level);
  auto seq_b = encoder.encode(unit_b, cfg.level);

  if (dump_matrix || dump_path) {
    if (seq_a.empty() || seq_b.empty()) {
      std::cerr << "nothing to dump: at least one sequence is empty\n";
      return kExitOk;
    }
    auto matrix = codewarp::dtw_matrix(seq_a.values, seq_b.values, cfg.window);
    if (dump_matrix) {
      for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
          if (j > 0) std::cout << '\t';
          std::cout << fmt_double(matrix(i, j));
        }
        std::cout << '\n';
      }
    }
    if (dump_path) {
      if (!std::isfinite(matrix.final_cell())) {
        std::cerr << "no warp path: distance is infinite under this window\n";
      } else {
        for (const auto& p : codewarp::warp_path(matrix).points) {
          std::cout << p.i << ' ' << p.j << '\n';
        }
      }
    }
    return kExitOk;
  }

  auto report = run_compare(seq_a, seq_b, cfg);

  if (cfg.format == "json") {
    json j;
    j["files"] = {file_a, file_b};
    j["level"] = cfg.level;
    j["distance"] = distance_to_json(report.distance);
    j["path_length"] = report.path_length;
    j["matches"] = json::array();
    for (const auto& m : report.matches) {
      j["matches"].push_back({{"q_lines", {m.q_lines.first, m.q_lines.last}},
                              {"c_lines", {m.c_lines.first, m.c_lines.last}},
                              {"q_range", {m.q_begin, m.q_end}},
                              {"c_range", {m.c_begin, m.c_end}},
                              {"length", m.length},
                              {"mean_cost", m.mean_cost},
                              {"mean_deviation", m.mean_deviation}});
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "FDTW distance: " << fmt_double(report.distance) << '\n';
  std::cout << "warp path length: " << report.path_length << '\n';
  std::cout << "matches (min run " << cfg.min_run << "): " << report.matches.size() << '\n';
  for (std::size_t k = 0; k < report.matches.size(); ++k) {
    const auto& m = report.matches[k];
    std::cout << "  " << (k + 1) << ". " << unit_a.id << " lines " << m.q_lines.first << ".."
              << m.q_lines.last << "  " << unit_b.id << " lines " << m.c_lines.first << ".."
              << m.c_lines.last << "  length " << m.length << "  mean cost "
              << fmt_double(m.mean_cost) << "  mean deviation " << fmt_double(m.mean_deviation)
              << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct SkippedFile {
  std::string file;
  std::string error;
};

std::vector<fs::path> discover_files(const std::string& dir, bool recursive) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  if (recursive) {
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
  } else {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string unique_id(const std::string& stem, const std::map<std::string, int>& used) {
  auto it = used.find(stem);
  if (it == used.end()) return stem;
  return stem + "~" + std::to_string(it->second + 1);
}

int cmd_corpus(const std::string& dir, const std::string& query, const RunConfig& cfg) {
  auto table = resolve_table(cfg);
  codewarp::Encoder encoder(table);

  std::vector<SkippedFile> skipped;
  std::map<std::string, int> stem_uses;
  std::map<std::string, codewarp::SourceUnit> units;
  codewarp::Corpus corpus(cfg.level, table.fingerprint());

  for (const auto& path : discover_files(dir, cfg.recursive)) {
    std::string stem = path.stem().string();
    if (stem.empty()) stem = path.filename().string();
    std::string id = unique_id(stem, stem_uses);
    try {
      codewarp::SourceUnit unit(id, read_file(path));
      corpus.add(encoder.encode(unit, cfg.level));
      units.emplace(id, std::move(unit));
      stem_uses[stem] += 1;
    } catch (const codewarp::LexError& e) {
      std::cerr << "warning: skipping " << path.string() << ": " << e.what() << '\n';
      skipped.push_back({path.string(), e.what()});
    }
  }
  if (corpus.size() == 0) {
    std::cerr << "error: no encodable files in " << dir << '\n';
    return kExitUsage;
  }

  unsigned threads = std::thread::hardware_concurrency();
  auto table_d = codewarp::pairwise_distances(corpus, threads == 0 ? 1 : threads, cfg.window);

  if (query.empty()) {
    if (cfg.format == "json") {
      json j;
      j["level"] = cfg.level;
      j["ids"] = table_d.ids;
      j["distances"] = json::array();
      for (const auto& row : table_d.d) {
        json jr = json::array();
        for (double v : row) jr.push_back(distance_to_json(v));
        j["distances"].push_back(std::move(jr));
      }
      j["skipped"] = json::array();
      for (const auto& s : skipped) j["skipped"].push_back({{"file", s.file}, {"error", s.error}});
      std::cout << j.dump(2) << '\n';
    } else {
      const char sep = cfg.format == "csv" ? ',' : '\t';
      std::cout << "id";
      for (const auto& id : table_d.ids) std::cout << sep << id;
      std::cout << '\n';
      for (std::size_t r = 0; r < table_d.ids.size(); ++r) {
        std::cout << table_d.ids[r];
        for (double v : table_d.d[r]) std::cout << sep << fmt_double(v);
        std::cout << '\n';
      }
      if (cfg.format != "csv") {
        for (const auto& s : skipped) std::cout << "skipped: " << s.file << " (" << s.error << ")\n";
      }
    }
    return kExitOk;
  }

  if (!corpus.contains(query)) {
    std::cerr << "error: query id not in corpus: " << query << '\n';
    return kExitUsage;
  }
  auto ranked = codewarp::rank(query, table_d);

  // two-stage refinement: near-zero level-1 neighbors get a level-2 pass
  std::map<std::string, double> refined;
  if (cfg.refine && cfg.level == 1 && std::isfinite(ranked.d_max) && ranked.d_max > 0) {
    auto query_l2 = encoder.encode(units.at(query), 2);
    for (const auto& nb : ranked.neighbors) {
      if (std::isfinite(nb.distance) && nb.distance <= cfg.refine_threshold * ranked.d_max) {
        auto nb_l2 = encoder.encode(units.at(nb.id), 2);
        refined[nb.id] = codewarp::dtw_distance(query_l2.values, nb_l2.values, cfg.window);
      }
    }
  }

  if (cfg.format == "json") {
    json j;
    j["query"] = ranked.query_id;
    j["level"] = cfg.level;
    j["d_max"] = distance_to_json(ranked.d_max);
    j["top3"] = ranked.top3();
    j["neighbors"] = json::array();
    for (const auto& nb : ranked.neighbors) {
      json jn = {{"id", nb.id},
                 {"distance", distance_to_json(nb.distance)},
                 {"similarity_percent", nb.similarity}};
      if (auto it = refined.find(nb.id); it != refined.end())
        jn["refined_distance"] = distance_to_json(it->second);
      j["neighbors"].push_back(std::move(jn));
    }
    j["skipped"] = json::array();
    for (const auto& s : skipped) j["skipped"].push_back({{"file", s.file}, {"error", s.error}});
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  if (cfg.format == "csv") {
    std::cout << "rank,id,distance,similarity_percent";
    if (!refined.empty()) std::cout << ",refined_distance";
    std::cout << '\n';
    for (std::size_t k = 0; k < ranked.neighbors.size(); ++k) {
      const auto& nb = ranked.neighbors[k];
      std::cout << (k + 1) << ',' << nb.id << ',' << fmt_double(nb.distance) << ','
                << codewarp::format_percent(nb.similarity);
      if (!refined.empty()) {
        auto it = refined.find(nb.id);
        std::cout << ',' << (it == refined.end() ? "" : fmt_double(it->second));
      }
      std::cout << '\n';
    }
    return kExitOk;
  }

  std::cout << "query: " << ranked.query_id << "  (d_max: " << fmt_double(ranked.d_max) << ")\n";
  std::cout << "rank\tid\tdistance\tsimilarity%\n";
  for (std::size_t k = 0; k < ranked.neighbors.size(); ++k) {
    const auto& nb = ranked.neighbors[k];
    std::cout << (k + 1) << '\t' << nb.id << '\t' << fmt_double(nb.distance) << '\t'
              << codewarp::format_percent(nb.similarity);
    if (auto it = refined.find(nb.id); it != refined.end())
      std::cout << "\tlevel2: " << fmt_double(it->second);
    if (k < 3) std::cout << "\t*";
    std::cout << '\n';
  }
  for (const auto& s : skipped) std::cout << "skipped: " << s.file << " (" << s.error << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"source-code similarity via dynamic time warping over operator sequences"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string file, file_a, file_b, dir, query;
  bool normalized = false;
  std::size_t window_flag = 0;
  bool window_set = false;

  auto add_common = [&](CLI::App* sub, bool with_window) {
    sub->add_option("--level", cfg.level, "representation level: 1 (categories) or 2 (operators + reserved words)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    sub->add_option("--table", cfg.table_path, "path to a JSON encoding-table file");
    if (with_window) {
      sub->add_option("--window", window_flag, "band window: cells with |i-j| > W are excluded")
          ->check(CLI::NonNegativeNumber)
          ->each([&](const std::string&) { window_set = true; });
    }
  };

  auto* sc_encode = app.add_subcommand("encode", "print the value sequence of one source file");
  sc_encode->add_option("file", file, "source file")->required();
  add_common(sc_encode, false);
  sc_encode->add_flag("--with-spans", cfg.with_spans, "append line:column provenance per value");
  sc_encode->add_flag("--normalized", normalized, "print the post-preprocessing source instead");

  auto* sc_compare = app.add_subcommand("compare", "compare two source files");
  sc_compare->add_option("fileA", file_a, "first source file")->required();
  sc_compare->add_option("fileB", file_b, "second source file")->required();
  add_common(sc_compare, true);
  sc_compare->add_option("--min-run", cfg.min_run, "minimum diagonal run length to report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sc_compare->add_option("--max-dev", cfg.max_dev, "maximum mean diagonal deviation per match");
  sc_compare->add_option("--format", cfg.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bool dump_matrix = false, dump_path = false;
  sc_compare->add_flag("--dump-matrix", dump_matrix,
                       "debug: print the accumulation matrix, tab-separated");
  sc_compare->add_flag("--dump-path", dump_path, "debug: print the warp path, one `i j` per line");

  auto* sc_corpus = app.add_subcommand("corpus", "pairwise distances / ranking over a directory");
  sc_corpus->add_option("dir", dir, "directory of source files")->required();
  sc_corpus->add_option("--query", query, "rank the corpus against this id");
  add_common(sc_corpus, true);
  sc_corpus->add_flag("--recursive", cfg.recursive, "descend into subdirectories");
  auto* refine_opt =
      sc_corpus->add_flag("--refine", cfg.refine, "re-run near-zero neighbors at level 2");
  sc_corpus
      ->add_option("--refine-threshold", cfg.refine_threshold,
                   "refine neighbors with distance <= T * d_max")
      ->capture_default_str();
  sc_corpus->add_option("--format", cfg.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  refine_opt->needs(sc_corpus->get_option("--query"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (window_set) cfg.window = window_flag;

  try {
    if (sc_encode->parsed()) return cmd_encode(file, cfg, normalized);
    if (sc_compare->parsed()) return cmd_compare(file_a, file_b, cfg, dump_matrix, dump_path);
    return cmd_corpus(dir, query, cfg);
  } catch (const codewarp::LexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLex;
  } catch (const codewarp::TableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
