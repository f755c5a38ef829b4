#include <gtest/gtest.h>

#include <sidem/harness/suite.hpp>

using namespace sidem;
using namespace sidem::harness;

namespace {

Instance from_text(const char* text, const std::string& id = "inline") {
  const json spec = json::parse(text);
  return from_file(io::load_instance(spec), spec, id);
}

CorpusOptions small_corpus() {
  CorpusOptions opt;
  opt.zn_max = 8;
  opt.product_max = 4;
  opt.idealization_max = 4;
  opt.product3_values = {2, 3};
  opt.quotient_max = 8;
  return opt;
}

}  // namespace

TEST(Corpus, ZnCounts) {
  CorpusOptions opt;
  opt.families = {"zn"};
  opt.zn_max = 4;
  const auto corpus = generate_corpus(opt);
  // |R| + #maximal ideals + 2 per ring.
  EXPECT_EQ(corpus.size(), (2u + 1 + 2) + (3u + 1 + 2) + (4u + 1 + 2));
  std::set<std::size_t> sizes;
  for (const auto& i : corpus) sizes.insert(i.module->size());
  EXPECT_EQ(sizes, (std::set<std::size_t>{2, 3, 4}));
}

TEST(Corpus, EmptyFamilyListGivesEmptyCorpus) {
  CorpusOptions opt;
  opt.families = {};
  EXPECT_TRUE(generate_corpus(opt).empty());
}

TEST(Corpus, IdealizationFamilyIncludesSmallest) {
  CorpusOptions opt;
  opt.families = {"idealization"};
  opt.idealization_max = 2;
  const auto corpus = generate_corpus(opt);
  ASSERT_FALSE(corpus.empty());
  EXPECT_EQ(corpus.front().ring->size(), 4u);
  EXPECT_EQ(corpus.front().params, (json{{"n", 2}, {"d", 2}}));
}

TEST(Corpus, UnknownFamilyIsRejected) {
  CorpusOptions opt;
  opt.families = {"zn", "surreal"};
  EXPECT_THROW(generate_corpus(opt), std::invalid_argument);
}

TEST(Corpus, DeterministicAndReloadable) {
  const auto a = generate_corpus(small_corpus());
  const auto b = generate_corpus(small_corpus());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].spec(), b[i].spec());
    const auto li = io::load_instance(a[i].spec());
    EXPECT_EQ(*li.module, *a[i].module) << a[i].id;
    EXPECT_EQ(li.mult_set, a[i].s) << a[i].id;
  }
  std::set<std::string> families;
  for (const auto& i : a) families.insert(i.family);
  EXPECT_EQ(families.size(), known_families().size());
}

TEST(Registry, HasEveryStatement) {
  const auto ids = main_check_ids();
  EXPECT_GE(ids.size(), 16u);
  for (const char* id : {"example-2.6", "prop-2.3", "lemma-2.5", "prop-2.8a", "prop-2.8b", "prop-2.8c", "thm-2.8", "prop-2.9",
                         "thm-2.11", "thm-2.12", "thm-2.13", "thm-2.14", "prop-2.15", "cor-2.15", "prop-2.16", "cor-2.17",
                         "thm-2.18", "prop-2.19", "cor-2.20"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_THROW(find_check("no-such-check"), UnknownCheck);
  EXPECT_TRUE(find_check("lemma-2.5-converse").converse);
}

TEST(Registry, WorkedExamples) {
  const Instance z6 = from_text(R"({"ring": {"kind": "zn", "n": 6}, "module": {"kind": "regular"}})");
  EXPECT_EQ(evaluate(find_check("lemma-2.5"), z6).outcome, Outcome::pass);

  const Instance z4 = from_text(R"({"ring": {"kind": "zn", "n": 4}, "module": {"kind": "regular"}, "mult_set": {"generators": [3]}})");
  const CellResult r = evaluate(find_check("thm-2.18"), z4);
  EXPECT_EQ(r.outcome, Outcome::pass);
  // Statements agree per submodule: false together on 2Z4, true on 0 and M.
  const Module& m = *z4.module;
  const MultSet& s = z4.s;
  for (const auto& n : enumerate_submodules(m)) {
    const bool pure = is_s_pure_submodule(m, s, n).holds;
    EXPECT_EQ(pure, n.size() != 2);
    EXPECT_EQ(is_s_idempotent_submodule(m, s, n).holds, pure);
  }

  const Instance z2 = from_text(R"({"ring": {"kind": "zn", "n": 2}, "module": {"kind": "regular"}})");
  const CellResult t = evaluate(find_check("thm-2.14"), z2);
  EXPECT_EQ(t.outcome, Outcome::pass);
  EXPECT_EQ(evaluate(find_check("thm-2.8"), z2).outcome, Outcome::pass);
}

TEST(Registry, InapplicableIsSkippedWithReason) {
  const Instance z4 = from_text(R"({"ring": {"kind": "zn", "n": 4}, "module": {"kind": "regular"}, "mult_set": {"generators": [3]}})");
  const CellResult r = evaluate(find_check("example-2.6"), z4);
  EXPECT_EQ(r.outcome, Outcome::skipped);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Evaluate, CapOverrunsSkipAndOtherErrorsFail) {
  const Instance z2 = from_text(R"({"ring": {"kind": "zn", "n": 2}, "module": {"kind": "regular"}})");
  TheoremCheck capped{"capped", "", false, [](const Instance&) -> Evaluation { throw SizeExceeded("x", 2, 1); }};
  TheoremCheck broken{"broken", "", false, [](const Instance&) -> Evaluation { throw std::logic_error("bug"); }};
  EXPECT_EQ(evaluate(capped, z2).outcome, Outcome::skipped);
  EXPECT_EQ(evaluate(broken, z2).outcome, Outcome::fail);
  TheoremCheck vacuous{"vacuous", "", false, [](const Instance&) { return skip("hypothesis false"); }};
  EXPECT_EQ(evaluate(vacuous, z2, true).outcome, Outcome::skipped) << "negation never turns a skip into a failure";
}

TEST(Suite, EmptyCorpusPassesVacuously) {
  const SuiteReport r = run_suite({}, main_check_ids());
  EXPECT_TRUE(r.results.empty());
  EXPECT_TRUE(r.passed());
}

TEST(Suite, SmallCorpusHasNoFailures) {
  const auto corpus = generate_corpus(small_corpus());
  const SuiteReport r = run_suite(corpus, main_check_ids());
  for (const auto& c : r.results)
    EXPECT_NE(c.outcome, Outcome::fail) << r.checks[c.check] << " on " << corpus[c.instance].id << ": " << c.detail.dump()
                                        << " " << c.reason;
  // Every check is exercised somewhere.
  for (std::size_t c = 0; c < r.checks.size(); ++c) {
    bool passed_somewhere = false;
    for (const auto& cell : r.results) passed_somewhere = passed_somewhere || (cell.check == c && cell.outcome == Outcome::pass);
    EXPECT_TRUE(passed_somewhere) << r.checks[c];
  }
}

TEST(Suite, SelfTestFailsEveryCheck) {
  const auto corpus = generate_corpus(small_corpus());
  const SuiteReport r = run_suite(corpus, main_check_ids(), 1, 0, true);
  for (std::size_t c = 0; c < r.checks.size(); ++c) {
    std::size_t failures = 0;
    for (const auto& cell : r.results) failures += cell.check == c && cell.outcome == Outcome::fail;
    EXPECT_GE(failures, 1u) << r.checks[c];
  }
  EXPECT_TRUE(report_json(r, corpus)["self_test"].get<bool>());
}

TEST(Suite, ReportIsIndependentOfThreadCount) {
  CorpusOptions opt = small_corpus();
  opt.families = {"zn", "product", "quotient"};
  const auto corpus = generate_corpus(opt);
  const auto ids = main_check_ids();
  const std::string one = report_json(run_suite(corpus, ids, 1, 42), corpus).dump();
  const std::string many = report_json(run_suite(generate_corpus(opt), ids, 3, 42), corpus).dump();
  EXPECT_EQ(one, many);
}

TEST(Suite, ReportShape) {
  CorpusOptions opt;
  opt.families = {"zn"};
  opt.zn_max = 3;
  const auto corpus = generate_corpus(opt);
  const json j = report_json(run_suite(corpus, {"lemma-2.5", "example-2.6"}, 1, 7), corpus);
  EXPECT_EQ(j["tool_version"], tool_version);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["instances"].size(), corpus.size());
  EXPECT_EQ(j["results"].size(), 2 * corpus.size());
  const json& s = j["summary"];
  EXPECT_EQ(s["pass"].get<std::size_t>() + s["fail"].get<std::size_t>() + s["skipped"].get<std::size_t>(), 2 * corpus.size());
  for (const auto& r : j["results"]) {
    const std::string o = r["outcome"];
    if (o == "pass") { EXPECT_TRUE(r.contains("witness")); }
    if (o == "fail") { EXPECT_TRUE(r.contains("counterexample")); }
    if (o == "skipped") { EXPECT_TRUE(r.contains("reason")); }
  }
}

TEST(Search, FindsTheStrictGapOnZ4) {
  CorpusOptions opt;
  opt.families = {"zn"};
  opt.zn_max = 8;
  const SearchResult r = search_counterexample("lemma-2.5-converse", opt, 1);
  ASSERT_TRUE(r.found.has_value());
  const Instance& inst = r.candidates[*r.found];
  EXPECT_EQ(inst.module->size(), 4u);
  EXPECT_EQ(inst.ring->size(), 4u);
  EXPECT_EQ(inst.s.elements.elements(), (std::vector<Elem>{1, 3}));
}

TEST(Search, FindsPlaneOverPrimeField) {
  CorpusOptions opt;
  opt.families = {"product"};
  const SearchResult r = search_counterexample("prop-2.9-converse", opt, 5);
  ASSERT_TRUE(r.found.has_value());
  const Instance& inst = r.candidates[*r.found];
  const std::size_t p = inst.ring->size();
  EXPECT_TRUE(p == 2 || p == 3 || p == 5 || p == 7);
  EXPECT_EQ(inst.module->size(), p * p);
}

TEST(Search, SameSeedSameInstance) {
  CorpusOptions opt = small_corpus();
  for (const char* id : {"lemma-2.5-converse", "prop-2.3-converse", "prop-2.9-converse"}) {
    const SearchResult a = search_counterexample(id, opt, 99);
    const SearchResult b = search_counterexample(id, opt, 99);
    ASSERT_TRUE(a.found && b.found) << id;
    EXPECT_EQ(a.candidates[*a.found].id, b.candidates[*b.found].id) << id;
    EXPECT_EQ(a.tried, b.tried);
  }
}

TEST(Search, TrueStatementsHaveNoCounterexample) {
  CorpusOptions opt;
  opt.families = {"zn", "zd"};
  opt.zn_max = 10;
  for (const char* id : {"lemma-2.5", "prop-2.3", "thm-2.11"}) {
    const SearchResult r = search_counterexample(id, opt, 3);
    EXPECT_FALSE(r.found.has_value()) << id;
    EXPECT_EQ(r.tried, r.candidates.size());
  }
}
