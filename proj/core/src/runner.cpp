#include "lowdup/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lowdup/error.hpp"
#include "lowdup/extract.hpp"

namespace lowdup {
namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (min_match < 1) throw std::invalid_argument("--min-match must be >= 1");
  if (!(pairing_threshold >= 0.0 && pairing_threshold <= 1.0)) {
    throw std::invalid_argument("--pairing-threshold must be within [0, 1]");
  }
}

CompareOptions RunConfig::compare_options() const {
  return CompareOptions{min_match, pairing_threshold, involved};
}

PreparedSubmission prepare_submission(const RunConfig& config, const Submission& submission) {
  PreparedSubmission out;
  out.label = submission.label;
  out.mode = config.mode;
  if (config.mode == Mode::SLT) {
    out.lexemes = submission.lexemes;
  } else {
    try {
      out.table = prepare_method_table(submission.program, config.mode,
                                       config.include_synthetic, config.linearize);
    } catch (const Error& e) {
      throw e.with_context(submission.path.string());
    }
  }
  return out;
}

ComparisonReport compare_prepared(const RunConfig& config, const PreparedSubmission& a,
                                  const PreparedSubmission& b) {
  if (config.mode == Mode::SLT) {
    return slt_compare_tokens(a.lexemes, b.lexemes, config.compare_options(),
                              SltOptions{config.slt_abstract_identifiers});
  }
  return compare_tables(a.table, b.table, config.mode, config.compare_options());
}

ComparisonReport run_compare(const RunConfig& config, const fs::path& a, const fs::path& b) {
  config.validate();
  const auto pa = prepare_submission(config, load_submission(a, config.mode));
  const auto pb = prepare_submission(config, load_submission(b, config.mode));
  return compare_prepared(config, pa, pb);
}

namespace {

// Runs task(i) for i in [0, count) on up to `jobs` threads; rethrows the
// first failure.
template <typename Task>
void parallel_for(std::size_t count, std::size_t jobs, Task&& task) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

CorpusResult run_corpus(const RunConfig& config, const fs::path& dir) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  if (!fs::is_directory(dir)) {
    throw Error(ErrorKind::InputNotFound, dir.string() + " is not a directory");
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  if (dirs.size() < 2) {
    throw Error(ErrorKind::FewerThanTwoSubmissions,
                dir.string() + " holds " + std::to_string(dirs.size()) +
                    " submission directories, need at least 2");
  }

  std::vector<PreparedSubmission> prepared(dirs.size());
  parallel_for(dirs.size(), config.jobs, [&](std::size_t i) {
    prepared[i] = prepare_submission(config, load_submission(dirs[i], config.mode));
  });

  CorpusResult result;
  result.config = config;
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) index_pairs.emplace_back(i, j);
  }
  result.pairs.resize(index_pairs.size());
  parallel_for(index_pairs.size(), config.jobs, [&](std::size_t k) {
    const auto [i, j] = index_pairs[k];
    result.pairs[k] = PairResult{prepared[i].label, prepared[j].label,
                                 compare_prepared(config, prepared[i], prepared[j])};
  });

  result.ranking.resize(result.pairs.size());
  for (std::size_t k = 0; k < result.ranking.size(); ++k) result.ranking[k] = k;
  std::stable_sort(result.ranking.begin(), result.ranking.end(),
                   [&](std::size_t x, std::size_t y) {
                     const auto& px = result.pairs[x];
                     const auto& py = result.pairs[y];
                     if (px.report.similarity != py.report.similarity) {
                       return px.report.similarity > py.report.similarity;
                     }
                     return std::tie(px.a, px.b) < std::tie(py.a, py.b);
                   });
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string dump_method_table(const MethodTable& table) {
  std::string out;
  for (const auto& [key, tokens] : table.sequences) {
    const std::string prefix = key.str() + "\t";
    for (const Token& t : tokens) {
      out += prefix;
      out += std::to_string(t.origin.offset);
      out += '\t';
      out += format_token(t);
      out += '\n';
    }
  }
  return out;
}

std::string dump_tokens(const RunConfig& config, const fs::path& path, bool inline_calls) {
  const Submission sub = load_submission(path, config.mode);
  if (config.mode == Mode::SLT) {
    std::string out;
    for (const LexToken& t : sub.lexemes) {
      std::string text = t.text;
      for (std::size_t p = 0; (p = text.find('\t', p)) != std::string::npos; p += 2) {
        text.replace(p, 1, "\\t");
      }
      out += sub.label + "\t" + std::to_string(t.line) + ":" + std::to_string(t.column) +
             "\t" + std::string(to_string(t.kind)) + ":" + text + "\n";
    }
    return out;
  }
  try {
    MethodTable table = extract_program(sub.program, config.include_synthetic);
    if (config.mode == Mode::LA) {
      table = linearize_abstract(sub.program, std::move(table), config.linearize);
    }
    if (inline_calls) table = inline_all(table, sub.program, config.linearize);
    return dump_method_table(table);
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

std::string corpus_to_json(const CorpusResult& result, bool verbose) {
  using nlohmann::json;
  const RunConfig& c = result.config;
  json config = {{"mode", std::string(to_string(c.mode))},
                 {"min_match", c.min_match},
                 {"pairing_threshold", c.pairing_threshold},
                 {"involved", std::string(to_string(c.involved))},
                 {"include_synthetic", c.include_synthetic},
                 {"jobs", c.jobs}};
  json pairs = json::array();
  for (const PairResult& p : result.pairs) {
    pairs.push_back({{"a", p.a}, {"b", p.b}, {"report", json::parse(report_to_json(p.report, verbose))}});
  }
  json ranking = json::array();
  for (const std::size_t k : result.ranking) {
    ranking.push_back({{"a", result.pairs[k].a},
                       {"b", result.pairs[k].b},
                       {"similarity", result.pairs[k].report.similarity}});
  }
  const json doc = {{"config", std::move(config)},
                    {"pairs", std::move(pairs)},
                    {"ranking", std::move(ranking)},
                    {"metadata", {{"elapsed_seconds", result.elapsed_seconds},
                                  {"pair_count", result.pairs.size()}}}};
  return doc.dump(2) + "\n";
}

std::string corpus_to_csv(const CorpusResult& result) {
  std::string out = csv_header();
  for (const std::size_t k : result.ranking) {
    out += csv_row(result.pairs[k].a, result.pairs[k].b, result.pairs[k].report);
  }
  return out;
}

std::string corpus_to_text(const CorpusResult& result, bool verbose, bool color) {
  std::string out;
  for (const std::size_t k : result.ranking) {
    const PairResult& p = result.pairs[k];
    out += report_to_text(p.a, p.b, p.report, verbose, color);
  }
  return out;
}

}  // namespace lowdup
