#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>
#include <tuple>

#include "corpus.hpp"
#include "registry.hpp"

namespace sidem::harness {

inline constexpr const char* tool_version = "0.1.0";

enum class Outcome { pass, fail, skipped };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

struct CellResult {
  std::size_t check = 0;     // index into SuiteReport::checks
  std::size_t instance = 0;  // index into the corpus
  Outcome outcome = Outcome::skipped;
  json detail;
  std::string reason;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  bool self_test = false;
  std::vector<std::string> checks;
  std::vector<CellResult> results;  // ordered by instance, then check

  std::size_t count(Outcome o) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const CellResult& r) { return r.outcome == o; }));
  }
  std::size_t failures() const { return count(Outcome::fail); }
  bool passed() const { return failures() == 0; }
};

/// Evaluates one check on one instance. Cap overruns are skips; any other
/// exception is a failure, since it can only come from a bug.
inline CellResult evaluate(const TheoremCheck& check, const Instance& inst, bool negate = false) {
  CellResult out;
  try {
    Evaluation e = check.run(inst);
    if (!e.applicable) {
      out.outcome = Outcome::skipped;
      out.reason = e.reason;
      return out;
    }
    const bool holds = negate ? !e.holds : e.holds;
    out.outcome = holds ? Outcome::pass : Outcome::fail;
    out.detail = std::move(e.detail);
    out.reason = e.reason;
  } catch (const SizeExceeded& e) {
    out.outcome = Outcome::skipped;
    out.reason = std::string("size cap: ") + e.what();
  } catch (const std::exception& e) {
    out.outcome = Outcome::fail;
    out.reason = std::string("exception: ") + e.what();
  }
  return out;
}

/// Runs every check on every instance with `jobs` worker threads. Instances
/// are handed out in order; the report is ordered the same way whatever the
/// interleaving.
inline SuiteReport run_suite(const std::vector<Instance>& corpus, const std::vector<std::string>& check_ids,
                             unsigned jobs = 1, std::uint64_t seed = 0, bool self_test = false) {
  std::vector<const TheoremCheck*> checks;
  for (const auto& id : check_ids) checks.push_back(&find_check(id));
  SuiteReport report;
  report.seed = seed;
  report.self_test = self_test;
  report.checks = check_ids;
  std::vector<std::vector<CellResult>> rows(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      for (std::size_t c = 0; c < checks.size(); ++c) {
        CellResult r = evaluate(*checks[c], corpus[i], self_test);
        r.check = c;
        r.instance = i;
        rows[i].push_back(std::move(r));
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& row : rows)
    for (auto& r : row) report.results.push_back(std::move(r));
  return report;
}

struct SearchResult {
  std::optional<std::size_t> found;  // index into the candidate list
  std::size_t tried = 0;
  CellResult cell;
  std::vector<Instance> candidates;  // in the order tried
};

/// Looks for an instance on which `check_id` fails. Candidates are ordered
/// by |M| ascending; within a module size non-degenerate S come first, then
/// larger S (a failure with a larger S is the stronger counterexample). Ties
/// are shuffled with the seed. The first failure is returned.
inline SearchResult search_counterexample(const std::string& check_id, const CorpusOptions& opt, std::uint64_t seed) {
  const TheoremCheck& check = find_check(check_id);
  SearchResult out;
  out.candidates = generate_corpus(opt);
  auto key = [](const Instance& i) { return std::tuple<std::size_t, bool, std::size_t>(i.module->size(), i.degenerate(), ~i.s.size()); };
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [&](const Instance& a, const Instance& b) { return key(a) < key(b); });
  // Fisher-Yates on each run of equal keys, drawing raw engine output so the
  // order does not depend on the standard library's distributions.
  std::mt19937_64 rng(seed);
  for (std::size_t lo = 0; lo < out.candidates.size();) {
    std::size_t hi = lo;
    while (hi < out.candidates.size() && key(out.candidates[hi]) == key(out.candidates[lo])) ++hi;
    for (std::size_t k = hi - lo; k > 1; --k) std::swap(out.candidates[lo + k - 1], out.candidates[lo + rng() % k]);
    lo = hi;
  }
  for (std::size_t i = 0; i < out.candidates.size(); ++i) {
    ++out.tried;
    CellResult r = evaluate(check, out.candidates[i]);
    if (r.outcome == Outcome::fail) {
      r.instance = i;
      out.found = i;
      out.cell = std::move(r);
      break;
    }
  }
  return out;
}

/// Machine-readable report: one entry per instance and per (check, instance) cell.
inline json report_json(const SuiteReport& report, const std::vector<Instance>& corpus) {
  json out;
  out["tool_version"] = tool_version;
  out["seed"] = report.seed;
  if (report.self_test) out["self_test"] = true;
  out["checks"] = report.checks;
  json instances = json::array();
  for (const auto& inst : corpus) {
    json j{{"id", inst.id}, {"family", inst.family}, {"params", inst.params}};
    j.update(inst.spec());
    j["degenerate"] = inst.degenerate();
    instances.push_back(std::move(j));
  }
  out["instances"] = std::move(instances);
  json results = json::array();
  for (const auto& r : report.results) {
    json j{{"check", report.checks[r.check]}, {"instance", corpus[r.instance].id}, {"outcome", outcome_name(r.outcome)}};
    if (r.outcome == Outcome::pass) j["witness"] = r.detail;
    if (r.outcome == Outcome::fail) j["counterexample"] = r.detail;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["degenerate"] = corpus[r.instance].degenerate();
    results.push_back(std::move(j));
  }
  out["results"] = std::move(results);

  json summary{{"pass", report.count(Outcome::pass)},
               {"fail", report.count(Outcome::fail)},
               {"skipped", report.count(Outcome::skipped)}};
  json by_check = json::object();
  for (std::size_t c = 0; c < report.checks.size(); ++c) {
    std::size_t counts[3] = {0, 0, 0};
    std::map<std::string, std::size_t> reasons;
    for (const auto& r : report.results) {
      if (r.check != c) continue;
      ++counts[static_cast<int>(r.outcome)];
      if (r.outcome == Outcome::skipped) ++reasons[r.reason];
    }
    json entry{{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
    json skipped = json::object();
    for (const auto& [reason, n] : reasons) skipped[reason] = n;
    entry["skipped_reasons"] = std::move(skipped);
    by_check[report.checks[c]] = std::move(entry);
  }
  summary["by_check"] = std::move(by_check);
  out["summary"] = std::move(summary);
  return out;
}

}  // namespace sidem::harness
