// Command line front end: check, enumerate, verify, search.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <sidem/harness/suite.hpp>

namespace {

using namespace sidem;
using harness::json;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_counterexample = 3;

std::string format_set(const std::vector<Elem>& xs, const std::function<std::string(Elem)>& fmt) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + fmt(xs[i]);
  return out + "}";
}

std::string module_set(const Module& m, const std::vector<Elem>& xs) {
  return format_set(xs, [&](Elem x) { return m.format(x); });
}

std::string ring_set(const Ring& r, const std::vector<Elem>& xs) {
  return format_set(xs, [&](Elem x) { return r.format(x); });
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

struct Loaded {
  io::LoadedInstance inst;
  json spec;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::InstanceFileError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  json spec;
  try {
    spec = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw io::InstanceFileError(path, e.what());
  }
  try {
    return {io::load_instance(spec), spec};
  } catch (const AlgebraError& e) {
    throw io::InstanceFileError(path, e.what());
  }
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string instance;
  std::string property;
  std::optional<std::string> submodule;
  std::optional<std::string> element;
  std::string out;
};

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "s-idempotent",  "s-idempotent-element", "fully-s-idempotent", "s-multiplication", "s-pure",
      "s-copure",      "fully-s-pure",         "fully-s-copure",     "idempotent",       "idempotent-element",
      "fully-idempotent", "multiplication",    "pure",               "copure",           "fully-pure",
      "fully-copure"};
  return names;
}

json full_verdict_json(const Module& m, const Verdict& v) {
  json out = harness::verdict_json(m, v);
  if (v.holds && v.witness && !v.witness->per_submodule.empty()) {
    json per = json::array();
    for (const auto& w : v.witness->per_submodule) {
      json e{{"submodule", harness::gens_json(m, w.submodule)}, {"s", harness::elem_json(m.ring(), w.s)}};
      if (w.ideal) e["ideal"] = harness::gens_json(m.ring(), *w.ideal);
      per.push_back(std::move(e));
    }
    out["per_submodule"] = std::move(per);
  }
  return out;
}

int cmd_check(const CheckArgs& a) {
  if (std::find(property_names().begin(), property_names().end(), a.property) == property_names().end())
    throw std::invalid_argument("unknown property '" + a.property + "'");
  Loaded l = load(a.instance);
  const Module& m = *l.inst.module;
  std::string name = a.property;
  MultSet s = l.inst.mult_set;
  if (name.rfind("s-", 0) != 0 && name.find("-s-") == std::string::npos) {
    s = trivial_mult_set(l.inst.ring);
    name = name.rfind("fully-", 0) == 0 ? "fully-s-" + name.substr(6) : "s-" + name;
  }

  auto need_submodule = [&]() -> Submodule {
    if (a.submodule) return submodule_generated(m, io::parse_element_list(*a.submodule, m.radix(), "--submodule"));
    if (l.inst.submodule) return *l.inst.submodule;
    throw std::invalid_argument("property '" + a.property + "' needs --submodule or a submodule block");
  };

  Verdict v;
  if (name == "s-idempotent") v = is_s_idempotent_submodule(m, s, need_submodule());
  else if (name == "s-idempotent-element") {
    if (!a.element) throw std::invalid_argument("property '" + a.property + "' needs --element");
    auto xs = io::parse_element_list(*a.element, m.radix(), "--element");
    if (xs.size() != 1) throw std::invalid_argument("--element takes exactly one element");
    v = is_s_idempotent_element(m, s, xs[0]);
  } else if (name == "fully-s-idempotent") v = is_fully_s_idempotent(m, s);
  else if (name == "s-multiplication") v = is_s_multiplication(m, s);
  else if (name == "s-pure") v = is_s_pure_submodule(m, s, need_submodule());
  else if (name == "s-copure") v = is_s_copure_submodule(m, s, need_submodule());
  else if (name == "fully-s-pure") v = is_fully(FullyProperty::s_pure, m, s);
  else v = is_fully(FullyProperty::s_copure, m, s);

  std::cout << std::left << std::setw(16) << "property" << a.property << '\n'
            << std::setw(16) << "instance" << a.instance << '\n'
            << std::setw(16) << "S" << ring_set(*l.inst.ring, s.elements.elements()) << '\n'
            << std::setw(16) << "holds" << (v.holds ? "true" : "false") << '\n'
            << std::setw(16) << "degenerate" << (v.degenerate ? "true" : "false") << '\n';
  const Ring& r = *l.inst.ring;
  if (v.holds && v.witness) {
    if (v.witness->s) std::cout << std::setw(16) << "witness s" << r.format(*v.witness->s) << '\n';
    if (v.witness->a) std::cout << std::setw(16) << "witness a" << r.format(*v.witness->a) << '\n';
    for (const auto& w : v.witness->per_submodule) {
      std::cout << std::setw(16) << "  submodule" << std::setw(24) << module_set(m, w.submodule.elements.elements())
                << " s=" << r.format(w.s);
      if (w.ideal) std::cout << " I=" << ring_set(r, w.ideal->elements.elements());
      std::cout << '\n';
    }
  }
  if (!v.holds && v.counterexample) {
    const auto& c = *v.counterexample;
    if (c.submodule) std::cout << std::setw(16) << "counterexample" << "submodule " << module_set(m, c.submodule->elements.elements()) << '\n';
    if (c.ideal) std::cout << std::setw(16) << "" << "ideal " << ring_set(r, c.ideal->elements.elements()) << '\n';
    if (c.element) std::cout << std::setw(16) << "" << "element " << m.format(*c.element) << '\n';
    if (c.s) std::cout << std::setw(16) << "" << "fails for s = " << r.format(*c.s) << " (hence for every s in S)\n";
  }

  if (!a.out.empty()) {
    json res{{"check", a.property}, {"instance", a.instance}, {"outcome", v.holds ? "pass" : "fail"}};
    res[v.holds ? "witness" : "counterexample"] = full_verdict_json(m, v);
    res["degenerate"] = v.degenerate;
    json report{{"tool_version", harness::tool_version},
                {"seed", nullptr},
                {"instances", json::array({io::to_raw_json(l.inst)})},
                {"results", json::array({res})},
                {"summary", {{"pass", v.holds ? 1 : 0}, {"fail", v.holds ? 0 : 1}, {"skipped", 0}}}};
    write_json(a.out, report);
  }
  return v.holds ? exit_ok : exit_false;
}

// ------------------------------------------------------------ enumerate

struct EnumerateArgs {
  std::string what;
  std::string instance;
  bool annotate = false;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a) {
  Loaded l = load(a.instance);
  const Module& m = *l.inst.module;
  const Ring& r = *l.inst.ring;
  const MultSet& s = l.inst.mult_set;
  json rows = json::array();
  auto line = [](std::ostream& os, std::size_t i) -> std::ostream& { return os << std::right << std::setw(4) << i << "  " << std::left; };

  if (a.what == "submodules") {
    const auto& subs = enumerate_submodules(m);
    std::cout << std::left << std::setw(6) << "#" << std::setw(6) << "size" << std::setw(28) << "generators"
              << (a.annotate ? "s-idem s-pure s-copure  " : "") << "elements\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& n = subs[i];
      json row{{"index", i}, {"size", n.size()}, {"generators", harness::gens_json(m, n)},
               {"elements", io::module_elements_json(m, n.elements.elements())}};
      line(std::cout, i) << std::setw(6) << n.size() << std::setw(28) << module_set(m, n.generators);
      if (a.annotate) {
        const bool idem = is_s_idempotent_submodule(m, s, n).holds;
        const bool pure = is_s_pure_submodule(m, s, n).holds;
        const bool copure = is_s_copure_submodule(m, s, n).holds;
        std::cout << std::setw(7) << (idem ? "yes" : "no") << std::setw(7) << (pure ? "yes" : "no") << std::setw(10)
                  << (copure ? "yes" : "no");
        row["s_idempotent"] = idem;
        row["s_pure"] = pure;
        row["s_copure"] = copure;
      }
      std::cout << module_set(m, n.elements.elements()) << '\n';
      rows.push_back(std::move(row));
    }
  } else if (a.what == "ideals" || a.what == "maximal-ideals") {
    const auto& ideals = a.what == "ideals" ? enumerate_ideals(r) : maximal_ideals(r);
    const auto& maxes = maximal_ideals(r);
    std::cout << std::left << std::setw(6) << "#" << std::setw(6) << "size" << std::setw(28) << "generators"
              << (a.annotate ? "prime  maximal  " : "") << "elements\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const auto& id = ideals[i];
      json row{{"index", i}, {"size", id.size()}, {"generators", harness::gens_json(r, id)},
               {"elements", io::ring_elements_json(r, id.elements.elements())}};
      line(std::cout, i) << std::setw(6) << id.size() << std::setw(28) << ring_set(r, id.generators);
      if (a.annotate) {
        const bool prime = is_prime(r, id);
        const bool maximal = std::find(maxes.begin(), maxes.end(), id) != maxes.end();
        std::cout << std::setw(7) << (prime ? "yes" : "no") << std::setw(9) << (maximal ? "yes" : "no");
        row["prime"] = prime;
        row["maximal"] = maximal;
      }
      std::cout << ring_set(r, id.elements.elements()) << '\n';
      rows.push_back(std::move(row));
    }
  } else if (a.what == "mult-set") {
    const ElementSet& us = units(r);
    std::cout << std::left << std::setw(6) << "#" << (a.annotate ? "unit  " : "") << "element\n";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
      const Elem x = s.elements.elements()[i];
      json row{{"index", i}, {"element", harness::elem_json(r, x)}};
      line(std::cout, i);
      if (a.annotate) {
        std::cout << std::setw(6) << (us.contains(x) ? "yes" : "no");
        row["unit"] = us.contains(x);
      }
      std::cout << r.format(x) << '\n';
      rows.push_back(std::move(row));
    }
    std::cout << "S = " << ring_set(r, s.elements.elements()) << (s.degenerate() ? "  (degenerate: contains 0)" : "")
              << '\n';
  } else {
    throw std::invalid_argument("enumerate: expected submodules, ideals, maximal-ideals or mult-set, got '" + a.what + "'");
  }
  std::cout << rows.size() << " row(s)\n";
  if (!a.out.empty()) write_json(a.out, json{{"tool_version", harness::tool_version}, {"what", a.what}, {"rows", rows}});
  return exit_ok;
}

// ---------------------------------------------------------- verify/search

struct CorpusArgs {
  std::string families;
  std::uint32_t zn_max = 30;
  std::uint32_t product_max = 8;
  std::uint32_t idealization_max = 8;
};

harness::CorpusOptions corpus_options(const CorpusArgs& a) {
  harness::CorpusOptions opt;
  if (!a.families.empty()) {
    opt.families.clear();
    std::stringstream ss(a.families);
    std::string f;
    while (std::getline(ss, f, ','))
      if (!f.empty()) opt.families.push_back(f);
  }
  opt.zn_max = a.zn_max;
  opt.product_max = a.product_max;
  opt.idealization_max = a.idealization_max;
  return opt;
}

struct VerifyArgs {
  CorpusArgs corpus;
  bool all = false;
  std::vector<std::string> checks;
  std::string instance;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool self_test = false;
};

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) out.push_back(id);
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> ids = a.all || a.checks.empty() ? harness::main_check_ids() : split_ids(a.checks);
  for (const auto& id : ids) harness::find_check(id);

  std::vector<harness::Instance> corpus;
  if (!a.instance.empty()) {
    Loaded l = load(a.instance);
    corpus.push_back(harness::from_file(l.inst, l.spec, a.instance));
  } else {
    corpus = harness::generate_corpus(corpus_options(a.corpus));
  }
  const harness::SuiteReport report = harness::run_suite(corpus, ids, a.jobs, a.seed, a.self_test);

  std::cout << std::left << std::setw(22) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
            << std::setw(10) << "skipped" << '\n';
  for (std::size_t c = 0; c < ids.size(); ++c) {
    std::size_t n[3] = {0, 0, 0};
    for (const auto& r : report.results)
      if (r.check == c) ++n[static_cast<int>(r.outcome)];
    std::cout << std::left << std::setw(22) << ids[c] << std::right << std::setw(8) << n[0] << std::setw(8) << n[1]
              << std::setw(10) << n[2] << '\n';
  }
  std::cout << std::left << std::setw(22) << "total" << std::right << std::setw(8) << report.count(harness::Outcome::pass)
            << std::setw(8) << report.count(harness::Outcome::fail) << std::setw(10)
            << report.count(harness::Outcome::skipped) << '\n';
  std::size_t shown = 0;
  for (const auto& r : report.results) {
    if (r.outcome != harness::Outcome::fail || shown >= 20) continue;
    ++shown;
    std::cout << "FAIL " << ids[r.check] << "  " << corpus[r.instance].id << "  " << r.detail.dump()
              << (r.reason.empty() ? "" : "  " + r.reason) << '\n';
  }
  std::cout << corpus.size() << " instance(s), " << (report.passed() ? "no failures" : "FAILURES") << '\n';
  if (!a.out.empty()) write_json(a.out, harness::report_json(report, corpus));
  return report.passed() ? exit_ok : exit_counterexample;
}

struct SearchArgs {
  CorpusArgs corpus;
  std::string check;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_search(const SearchArgs& a) {
  harness::find_check(a.check);
  const harness::SearchResult res = harness::search_counterexample(a.check, corpus_options(a.corpus), a.seed);
  json report{{"tool_version", harness::tool_version}, {"seed", a.seed}, {"check", a.check}, {"tried", res.tried}};
  if (res.found) {
    const auto& inst = res.candidates[*res.found];
    std::cout << "counterexample to " << a.check << " after " << res.tried << " candidate(s)\n"
              << "instance  " << inst.id << '\n'
              << "S         " << ring_set(*inst.ring, inst.s.elements.elements()) << '\n'
              << "degenerate " << (inst.degenerate() ? "true" : "false") << '\n'
              << "detail    " << res.cell.detail.dump() << '\n'
              << inst.spec().dump() << '\n';
    report["instance"] = json{{"id", inst.id}, {"family", inst.family}, {"params", inst.params}};
    report["instance"].update(inst.spec());
    report["counterexample"] = res.cell.detail;
  } else {
    std::cout << "no counterexample to " << a.check << " among " << res.tried << " candidate(s)\n";
    report["instance"] = nullptr;
  }
  if (!a.out.empty()) write_json(a.out, report);
  return res.found ? exit_counterexample : exit_ok;
}

void add_corpus_flags(CLI::App* cmd, CorpusArgs& c) {
  cmd->add_option("--families", c.families, "comma-separated corpus families (zn,zd,product,idealization,product3,quotient)");
  cmd->add_option("--zn-max", c.zn_max, "largest n for the zn and zd families")->check(CLI::Range(2u, 4096u));
  cmd->add_option("--product-max", c.product_max, "largest factor order in the product family")->check(CLI::Range(2u, 64u));
  cmd->add_option("--idealization-max", c.idealization_max, "largest n in the idealization family")->check(CLI::Range(2u, 64u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide S-idempotency, S-multiplication and S-purity of finite modules, and verify the theorems about them."};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide one property of an instance");
  c->add_option("--instance", check.instance, "instance file (JSON)")->required();
  c->add_option("--property", check.property, "property name")->required();
  c->add_option("--submodule", check.submodule, "submodule generators, e.g. \"1:0,0:1\"");
  c->add_option("--element", check.element, "module element, e.g. \"2\" or \"1:0\"");
  c->add_option("--out", check.out, "write a JSON report here");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "list submodules, ideals, maximal ideals or the multiplicative set");
  e->add_option("what", en.what, "submodules | ideals | maximal-ideals | mult-set")->required();
  e->add_option("--instance", en.instance, "instance file (JSON)")->required();
  e->add_flag("--annotate", en.annotate, "add property columns");
  e->add_option("--out", en.out, "write the listing as JSON here");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run theorem checks over a corpus or one instance");
  v->add_flag("--all", ver.all, "every main check (the default)");
  v->add_option("--check", ver.checks, "check id(s), repeatable or comma-separated");
  v->add_option("--instance", ver.instance, "verify a single instance file instead of a corpus");
  add_corpus_flags(v, ver.corpus);
  v->add_option("--jobs", ver.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  v->add_option("--seed", ver.seed, "recorded in the report");
  v->add_option("--out", ver.out, "write the JSON report here");
  v->add_flag("--self-test", ver.self_test, "negate every conclusion; each check should then fail somewhere");

  SearchArgs se;
  auto* s = app.add_subcommand("search", "look for an instance on which a check fails");
  s->add_option("--check", se.check, "check id")->required();
  add_corpus_flags(s, se.corpus);
  s->add_option("--seed", se.seed, "shuffle seed");
  s->add_option("--out", se.out, "write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return exit_usage;
  }

  try {
    if (c->parsed()) return cmd_check(check);
    if (e->parsed()) return cmd_enumerate(en);
    if (v->parsed()) return cmd_verify(ver);
    return cmd_search(se);
  } catch (const AlgebraError& err) {
    std::cerr << "error: " << err.what() << '\n';
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
  } catch (const std::runtime_error& err) {
    std::cerr << "error: " << err.what() << '\n';
  }
  return exit_usage;
}
