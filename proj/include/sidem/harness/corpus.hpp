#pragma once

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "instance.hpp"

namespace sidem::harness {

/// Corpus families and their bounds.
///   zn           Z_n over itself, 2 <= n <= zn_max
///   zd           Z_d over Z_n for every d | n, d < n (d = 1 is the zero module)
///   product      Z_m x Z_n over the product ring, and Z_m + Z_n over Z_lcm(m,n); 2 <= m <= n <= product_max
///   idealization Z_n x Z_d (trivial extension) over itself, d | n, d > 1, n <= idealization_max
///   product3     Z_a x Z_b x Z_c over the product ring, a <= b <= c from product3_values
///   quotient     M/N for the non-cyclic modules above with |M| <= quotient_max, 0 < N < M
struct CorpusOptions {
  std::vector<std::string> families{"zn", "zd", "product", "idealization", "product3", "quotient"};
  std::uint32_t zn_max = 30;
  std::uint32_t product_max = 8;
  std::uint32_t idealization_max = 8;
  std::vector<std::uint32_t> product3_values{2, 3, 4};
  std::size_t quotient_max = 16;
};

inline const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names{"zn", "zd", "product", "idealization", "product3", "quotient"};
  return names;
}

namespace detail {

inline json zn_spec(std::uint32_t n) { return json{{"kind", "zn"}, {"n", n}}; }

inline std::string params_text(const json& params) {
  std::string out;
  for (const auto& [k, v] : params.items()) {
    if (!out.empty()) out += ",";
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

/// One module over a ring, before crossing with multiplicative sets.
struct Seed {
  std::string family;
  json params;
  json ring_spec;
  json module_spec;
  RingPtr ring;
  ModulePtr module;
  std::vector<ModulePtr> factors;
};

/// The multiplicative set families of a ring, in a fixed order:
/// {1}, U(R), closure({x}) for each x, R - m for each maximal ideal m.
inline std::vector<std::pair<std::string, MultSet>> mult_set_family(const RingPtr& r) {
  std::vector<std::pair<std::string, MultSet>> out;
  out.emplace_back("one", trivial_mult_set(r));
  out.emplace_back("units", units_mult_set(r));
  for (Elem x = 0; x < r->size(); ++x) out.emplace_back("closure(" + r->format(x) + ")", closure(r, {x}));
  const auto& maxes = maximal_ideals(*r);
  for (std::size_t i = 0; i < maxes.size(); ++i) {
    std::string label = "complement(";
    const auto& g = maxes[i].generators;
    for (std::size_t k = 0; k < g.size(); ++k) label += (k ? "," : "") + r->format(g[k]);
    out.emplace_back(label + ")", complement_of_maximal(r, maxes[i]));
  }
  return out;
}

inline Seed seed_from_specs(std::string family, json params, json ring_spec, json module_spec) {
  io::RingBlock rb = io::parse_ring(ring_spec);
  io::ModuleBlock mb = io::parse_module(module_spec, rb);
  return Seed{std::move(family), std::move(params), std::move(ring_spec), std::move(module_spec),
              rb.ring,           mb.module,         mb.factors};
}

inline bool is_cyclic_module(const Module& m) {
  for (Elem x = 0; x < m.size(); ++x)
    if (submodule_generated(m, {x}).size() == m.size()) return true;
  return m.size() == 1;
}

}  // namespace detail

/// Builds the corpus deterministically: families in the order given, each
/// family's modules in parameter order, each crossed with the multiplicative set family.
inline std::vector<Instance> generate_corpus(const CorpusOptions& opt) {
  using detail::Seed;
  auto wants = [&](const std::string& f) {
    return std::find(opt.families.begin(), opt.families.end(), f) != opt.families.end();
  };
  for (const auto& f : opt.families)
    if (std::find(known_families().begin(), known_families().end(), f) == known_families().end())
      throw std::invalid_argument("unknown corpus family: " + f);

  std::vector<Seed> seeds;
  std::vector<Seed> quotient_sources;
  if (wants("zn"))
    for (std::uint32_t n = 2; n <= opt.zn_max; ++n)
      seeds.push_back(detail::seed_from_specs("zn", json{{"n", n}}, detail::zn_spec(n), json{{"kind", "regular"}}));
  if (wants("zd"))
    for (std::uint32_t n = 2; n <= opt.zn_max; ++n)
      for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0)
          seeds.push_back(detail::seed_from_specs("zd", json{{"n", n}, {"d", d}}, detail::zn_spec(n),
                                                  json{{"kind", "zd"}, {"d", d}}));
  if (wants("product") || wants("quotient"))
    for (std::uint32_t m = 2; m <= opt.product_max; ++m)
      for (std::uint32_t n = m; n <= opt.product_max; ++n) {
        Seed ring_product = detail::seed_from_specs(
            "product", json{{"m", m}, {"n", n}, {"over", "product"}},
            json{{"kind", "product"}, {"factors", {detail::zn_spec(m), detail::zn_spec(n)}}}, json{{"kind", "regular"}});
        const std::uint32_t l = std::lcm(m, n);
        Seed sum = detail::seed_from_specs(
            "product", json{{"m", m}, {"n", n}, {"over", "lcm"}}, detail::zn_spec(l),
            json{{"kind", "direct_sum"}, {"summands", {json{{"kind", "zd"}, {"d", m}}, json{{"kind", "zd"}, {"d", n}}}}});
        for (Seed* s : {&ring_product, &sum}) {
          if (s->module->size() <= opt.quotient_max) quotient_sources.push_back(*s);
          if (wants("product")) seeds.push_back(*s);
        }
      }
  if (wants("idealization") || wants("quotient"))
    for (std::uint32_t n = 2; n <= opt.idealization_max; ++n)
      for (std::uint32_t d = 2; d <= n; ++d)
        if (n % d == 0) {
          Seed s = detail::seed_from_specs(
              "idealization", json{{"n", n}, {"d", d}},
              json{{"kind", "idealization"}, {"base", detail::zn_spec(n)}, {"module", json{{"kind", "zd"}, {"d", d}}}},
              json{{"kind", "regular"}});
          if (s.module->size() <= opt.quotient_max) quotient_sources.push_back(s);
          if (wants("idealization")) seeds.push_back(std::move(s));
        }
  if (wants("product3")) {
    const auto& v = opt.product3_values;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i; j < v.size(); ++j)
        for (std::size_t k = j; k < v.size(); ++k)
          seeds.push_back(detail::seed_from_specs(
              "product3", json{{"a", v[i]}, {"b", v[j]}, {"c", v[k]}},
              json{{"kind", "product"}, {"factors", {detail::zn_spec(v[i]), detail::zn_spec(v[j]), detail::zn_spec(v[k])}}},
              json{{"kind", "regular"}}));
  }
  if (wants("quotient")) {
    // Quotients of cyclic modules are cyclic and already covered by zd.
    std::set<std::pair<json, json>> seen;
    for (const Seed& src : quotient_sources) {
      if (detail::is_cyclic_module(*src.module)) continue;
      const auto& subs = enumerate_submodules(*src.module);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const auto& n = subs[i];
        if (n.size() == 1 || n.size() == src.module->size()) continue;
        Quotient q = epi_image(*src.module, n);
        json mspec = io::module_raw_json(*q.module);
        if (!seen.emplace(src.ring_spec, mspec).second) continue;
        json params = src.params;
        params["source"] = src.family;
        params["kernel"] = gens_json(*src.module, n);
        seeds.push_back(Seed{"quotient", std::move(params), src.ring_spec, std::move(mspec), src.ring, q.module, {}});
      }
    }
  }

  std::vector<Instance> out;
  for (const Seed& seed : seeds) {
    auto analysis = std::make_shared<const ModuleAnalysis>(seed.module);
    const std::string base = seed.family + "(" + detail::params_text(seed.params) + ")";
    for (auto& [label, s] : detail::mult_set_family(seed.ring)) {
      Instance inst;
      inst.id = base + " S=" + label;
      inst.family = seed.family;
      inst.params = seed.params;
      inst.mult_label = label;
      inst.ring_spec = seed.ring_spec;
      inst.module_spec = seed.module_spec;
      inst.ring = seed.ring;
      inst.module = seed.module;
      inst.s = std::move(s);
      inst.factors = seed.factors;
      inst.analysis = analysis;
      out.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace sidem::harness
