#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace sidem::harness {

/// Result of one check on one instance. A check fails only when it is
/// applicable and its conclusion is false.
struct Evaluation {
  bool applicable = true;
  bool holds = true;
  json detail = json::object();
  std::string reason;
};

inline Evaluation skip(std::string reason) { return Evaluation{false, true, json::object(), std::move(reason)}; }
inline Evaluation conclude(bool holds, json detail) { return Evaluation{true, holds, std::move(detail), {}}; }

struct TheoremCheck {
  std::string id;
  std::string statement;
  bool converse = false;  // a statement expected to be false somewhere; used by search
  std::function<Evaluation(const Instance&)> run;
};

namespace checks {

inline Verdict fully(const Module& m, const MultSet& s) { return is_fully_s_idempotent(m, s); }

inline MultSet projection(const MultSet& s, const ProductIndex& idx, std::size_t i, const RingPtr& factor) {
  ElementSet out(factor->size());
  for (Elem t : s.elements) out.insert(idx.component(t, i));
  out.normalize();
  return mult_set_from_elements(factor, out);
}

/// Factor data of a product instance, or of the instance itself as a single factor.
struct Factors {
  std::vector<ModulePtr> modules;
  std::vector<MultSet> sets;
  bool is_product_set = false;
};

inline Factors factor_data(const Instance& inst) {
  Factors f;
  if (inst.factors.empty()) {
    f.modules = {inst.module};
    f.sets = {inst.s};
    f.is_product_set = true;
    return f;
  }
  f.modules = inst.factors;
  std::vector<RingPtr> rings;
  for (const auto& m : f.modules) rings.push_back(m->ring_ptr());
  const ProductIndex idx = product_index(rings);
  for (std::size_t i = 0; i < rings.size(); ++i) f.sets.push_back(projection(inst.s, idx, i, rings[i]));
  f.is_product_set = product_mult_set(inst.ring, f.sets) == inst.s;
  return f;
}

inline json bools(std::initializer_list<std::pair<const char*, bool>> items) {
  json out = json::object();
  for (const auto& [k, v] : items) out[k] = v;
  return out;
}

inline Evaluation prop_2_3(const Instance& inst) {
  const Module& m = *inst.module;
  const Verdict fi = is_fully_idempotent(m);
  const Verdict fs = fully(m, inst.s);
  const bool in_units = is_subset_units(inst.s);
  if (!fi.holds && !in_units) return skip("M is not fully idempotent and S is not inside U(R)");
  const bool ok = (!fi.holds || fs.holds) && (!in_units || fs.holds == fi.holds);
  return conclude(ok, json{{"fully_idempotent", verdict_json(m, fi)},
                           {"fully_s_idempotent", verdict_json(m, fs)},
                           {"s_in_units", in_units}});
}

inline Evaluation example_2_6(const Instance& inst) {
  const Module& m = *inst.module;
  const Ideal ann = annihilator(m);
  std::optional<Elem> t;
  for (Elem x : inst.s.elements)
    if (ann.contains(x)) {
      t = x;
      break;
    }
  if (!t) return skip("Ann(M) and S are disjoint");
  const Verdict fs = fully(m, inst.s);
  return conclude(fs.holds, json{{"annihilating_s", elem_json(m.ring(), *t)}, {"fully_s_idempotent", verdict_json(m, fs)}});
}

inline Evaluation lemma_2_5(const Instance& inst) {
  const Module& m = *inst.module;
  const Verdict fs = fully(m, inst.s);
  if (!fs.holds) return skip("M is not fully S-idempotent");
  const Verdict mult = is_s_multiplication(m, inst.s);
  return conclude(mult.holds, json{{"s_multiplication", verdict_json(m, mult)}});
}

inline Evaluation lemma_2_5_converse(const Instance& inst) {
  const Module& m = *inst.module;
  const Verdict mult = is_s_multiplication(m, inst.s);
  if (!mult.holds) return skip("M is not an S-multiplication module");
  const Verdict fs = fully(m, inst.s);
  return conclude(fs.holds, json{{"fully_s_idempotent", verdict_json(m, fs)}});
}

inline Evaluation prop_2_3_converse(const Instance& inst) {
  const Module& m = *inst.module;
  if (!fully(m, inst.s).holds) return skip("M is not fully S-idempotent");
  const Verdict fi = is_fully_idempotent(m);
  return conclude(fi.holds, json{{"fully_idempotent", verdict_json(m, fi)}});
}

/// Supersets of S: closure(S + U(R)) and closure(S + {x}) for every x.
inline Evaluation prop_2_8a(const Instance& inst) {
  const Module& m = *inst.module;
  const Ring& r = *inst.ring;
  if (!fully(m, inst.s).holds) return skip("M is not fully S-idempotent");
  std::vector<std::vector<Elem>> extra;
  extra.push_back(units(r).elements());
  for (Elem x = 0; x < r.size(); ++x) extra.push_back({x});
  for (const auto& add : extra) {
    std::vector<Elem> gens = inst.s.elements.elements();
    gens.insert(gens.end(), add.begin(), add.end());
    const MultSet bigger = closure(inst.ring, gens);
    const Verdict v = fully(m, bigger);
    if (!v.holds)
      return conclude(false, json{{"superset", set_json(r, bigger.elements)}, {"fully_s_idempotent", verdict_json(m, v)}});
  }
  return conclude(true, json{{"supersets_checked", extra.size()}});
}

inline Evaluation prop_2_8b(const Instance& inst) {
  const Module& m = *inst.module;
  const auto loc = inst.analysis->localization(inst.s);
  const MultSet sat = saturation(inst.s, *loc);
  const Verdict a = fully(m, inst.s);
  const Verdict b = fully(m, sat);
  return conclude(a.holds == b.holds, json{{"saturation", set_json(*inst.ring, sat.elements)},
                                           {"fully_s_idempotent", verdict_json(m, a)},
                                           {"fully_saturation_idempotent", verdict_json(m, b)}});
}

inline Evaluation prop_2_8c(const Instance& inst) {
  const Module& m = *inst.module;
  if (!fully(m, inst.s).holds) return skip("M is not fully S-idempotent");
  const auto& subs = inst.analysis->submodules();
  const auto& mods = inst.analysis->as_modules();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Verdict v = fully(*mods[i].value, inst.s);
    if (!v.holds)
      return conclude(false, json{{"submodule", gens_json(m, subs[i])}, {"inner", verdict_json(*mods[i].value, v)}});
  }
  return conclude(true, json{{"submodules_checked", subs.size()}});
}

inline Evaluation thm_2_8(const Instance& inst) {
  // Corpus modules carry S = {1} under several labels; one row is enough.
  if (inst.s.size() != 1 || (inst.mult_label != "one" && inst.mult_label != "file"))
    return skip("statement does not involve S; evaluated on the S = {1} instance of each module");
  const Module& m = *inst.module;
  const Verdict a = is_fully_idempotent(m);
  bool b = true, c = true, d = true;
  const auto primes = prime_ideals(*inst.ring);
  for (const auto& p : primes) b = b && fully(m, complement_of_maximal(inst.ring, p)).holds;
  std::size_t supported = 0;
  const auto& maxes = maximal_ideals(*inst.ring);
  for (const auto& mx : maxes) {
    const MultSet t = complement_of_maximal(inst.ring, mx);
    const bool f = fully(m, t).holds;
    c = c && f;
    if (inst.analysis->localization(t)->local_module->size() > 1) {
      ++supported;
      d = d && f;
    }
  }
  const bool agree = a.holds == b && b == c && c == d;
  json detail = bools({{"a", a.holds}, {"b", b}, {"c", c}, {"d", d}});
  detail["primes"] = primes.size();
  detail["maximal"] = maxes.size();
  detail["maximal_in_support"] = supported;
  return conclude(agree, std::move(detail));
}

inline Evaluation prop_2_9(const Instance& inst) {
  const Module& m = *inst.module;
  const auto& subs = inst.analysis->submodules();
  const auto& homs = inst.analysis->hom_sums();
  std::size_t idempotent = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!is_s_idempotent_submodule(m, inst.s, subs[i]).holds) continue;
    ++idempotent;
    auto w = find_witness(inst.s, [&](Elem t) { return scaled_within(m, t, subs[i], homs[i]); });
    if (!w) return conclude(false, json{{"submodule", gens_json(m, subs[i])}, {"hom_image_sum", gens_json(m, homs[i])}});
  }
  return conclude(true, json{{"idempotent_submodules", idempotent}});
}

inline Evaluation prop_2_9_converse(const Instance& inst) {
  const Module& m = *inst.module;
  const auto& subs = inst.analysis->submodules();
  const auto& homs = inst.analysis->hom_sums();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto w = find_witness(inst.s, [&](Elem t) { return scaled_within(m, t, subs[i], homs[i]); });
    if (!w) continue;
    const Verdict v = is_s_idempotent_submodule(m, inst.s, subs[i]);
    if (!v.holds)
      return conclude(false, json{{"submodule", gens_json(m, subs[i])},
                                  {"hom_image_sum", gens_json(m, homs[i])},
                                  {"s", elem_json(m.ring(), *w)}});
  }
  return conclude(true, json::object());
}

inline Evaluation thm_2_11(const Instance& inst) {
  const Module& m = *inst.module;
  const MultSet& s = inst.s;
  const auto mm = has_maximal_multiple(s);
  if (!mm) {
    Evaluation e = conclude(false, json{{"maximal_multiple", nullptr}});
    e.reason = "finite S without a maximal multiple";
    return e;
  }
  const bool a = fully(m, s).holds;
  bool b = true;
  for (const auto& rx : inst.analysis->cyclic()) b = b && is_s_idempotent_submodule(m, s, rx).holds;
  bool c = true;
  for (Elem x = 0; x < m.size() && c; ++x) c = is_s_idempotent_element(m, s, x).holds;
  bool d = true;
  const Elem p = product_of_elements(s);
  for (const auto& [meet, target] : inst.analysis->intersection_pairs()) {
    // Witnesses stay witnesses under multiples, so the product of S decides each pair.
    if (!scaled_within(m, p, meet, target)) {
      d = false;
      break;
    }
  }
  json detail = bools({{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  detail["maximal_multiple"] = elem_json(*inst.ring, *mm);
  return conclude(a == b && b == c && c == d, std::move(detail));
}

inline Evaluation products(const Instance& inst, std::size_t min_factors, std::size_t max_factors) {
  const Factors f = factor_data(inst);
  const std::size_t n = f.modules.size();
  if (n < min_factors || n > max_factors)
    return skip(n == 1 ? "not a product module" : "product of " + std::to_string(n) + " factors");
  if (!f.is_product_set) return skip("S is not a product of multiplicative sets of the factors");
  if (n > 1 && !(product_module(inst.ring, f.modules)->presentation() == inst.module->presentation()))
    return conclude(false, json{{"error", "product of the factors differs from M"}});
  const bool a = fully(*inst.module, inst.s).holds;
  bool b = true;
  json parts = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const bool fi = fully(*f.modules[i], f.sets[i]).holds;
    parts.push_back(fi);
    b = b && fi;
  }
  return conclude(a == b, json{{"factors", n}, {"a", a}, {"b", b}, {"factor_verdicts", parts}});
}

inline Evaluation thm_2_12(const Instance& inst) { return products(inst, 2, 2); }
inline Evaluation thm_2_13(const Instance& inst) { return products(inst, 1, 3); }

inline Evaluation thm_2_14(const Instance& inst) {
  const Module& m = *inst.module;
  const auto& subs = inst.analysis->submodules();
  const auto& as_mod = inst.analysis->as_modules();
  const auto& zero_times = inst.analysis->zero_times();
  const Idealization& ext = inst.analysis->idealized();
  const MultSet s0 = idealized_mult_set(inst.s, zero_submodule(m), ext);
  const MultSet sm = idealized_mult_set(inst.s, whole_module(m), ext);
  std::size_t fully_count = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const bool a = fully(*as_mod[i].value, inst.s).holds;
    const bool b = fully(*zero_times[i].value, s0).holds;
    const bool c = fully(*zero_times[i].value, sm).holds;
    if (a != b || b != c) {
      json detail = bools({{"a", a}, {"b", b}, {"c", c}});
      detail["submodule"] = gens_json(m, subs[i]);
      return conclude(false, std::move(detail));
    }
    fully_count += a;
  }
  return conclude(true, json{{"submodules", subs.size()}, {"fully_s_idempotent_submodules", fully_count}});
}

/// Shared by the epimorphism and quotient forms. `via_kernel` routes through
/// epi_image and kernel_of instead of using N directly.
inline Evaluation images(const Instance& inst, bool via_kernel) {
  const Module& m = *inst.module;
  const auto& subs = inst.analysis->submodules();
  const auto& quots = inst.analysis->quotients();
  const bool fs = fully(m, inst.s).holds;
  const Submodule zero = zero_submodule(m);
  bool applicable = fs;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Submodule ker = via_kernel ? kernel_of(m, quots[i].projection) : subs[i];
    if (!(ker == subs[i])) return conclude(false, json{{"error", "kernel of M -> M/N is not N"}, {"submodule", gens_json(m, subs[i])}});
    const bool image_fully = fully(*quots[i].module, inst.s).holds;
    if (fs && !image_fully)
      return conclude(false, json{{"direction", "image"}, {"kernel", gens_json(m, ker)}});
    std::optional<Elem> t;
    for (Elem x : inst.s.elements)
      if (scaled_within(m, x, ker, zero)) {
        t = x;
        break;
      }
    if (t && image_fully) {
      applicable = true;
      if (!fs)
        return conclude(false, json{{"direction", "converse"}, {"kernel", gens_json(m, ker)}, {"t", elem_json(m.ring(), *t)}});
    }
  }
  if (!applicable) return skip("M is not fully S-idempotent and no fully S-idempotent image has a kernel killed by S");
  return conclude(true, json{{"fully_s_idempotent", fs}, {"images", subs.size()}});
}

inline Evaluation prop_2_15(const Instance& inst) { return images(inst, true); }
inline Evaluation cor_2_15(const Instance& inst) { return images(inst, false); }

inline Evaluation prop_2_16(const Instance& inst) {
  const Module& m = *inst.module;
  const RingPtr& r = inst.ring;
  if (!fully(m, inst.s).holds) return skip("M is not fully S-idempotent");
  std::vector<std::pair<std::string, MultSet>> ts;
  ts.emplace_back("S", inst.s);
  ts.emplace_back("one", trivial_mult_set(r));
  ts.emplace_back("units", units_mult_set(r));
  for (const auto& mx : maximal_ideals(*r)) ts.emplace_back("complement", complement_of_maximal(r, mx));
  for (const auto& [label, t] : ts) {
    const auto loc = inst.analysis->localization(t);
    const MultSet image = localized_mult_set(inst.s, *loc);
    const Module& tm = *loc->local_module;
    const Verdict v = fully(tm, image);
    const bool inside = inst.s.elements.is_subset_of(saturation(t, *loc).elements);
    const bool plain = !inside || is_fully_idempotent(tm).holds;
    if (!v.holds || !plain)
      return conclude(false, json{{"t", label},
                                  {"t_elements", set_json(*r, t.elements)},
                                  {"fully_image_idempotent", v.holds},
                                  {"s_inside_saturation", inside},
                                  {"fully_idempotent", plain}});
  }
  return conclude(true, json{{"localizations", ts.size()}});
}

inline Evaluation cor_2_17(const Instance& inst) {
  const Module& m = *inst.module;
  const auto mm = has_maximal_multiple(inst.s);
  if (!mm) {
    Evaluation e = conclude(false, json{{"maximal_multiple", nullptr}});
    e.reason = "finite S without a maximal multiple";
    return e;
  }
  const auto loc = inst.analysis->localization(inst.s);
  const bool a = fully(m, inst.s).holds;
  const bool b = is_fully_idempotent(*loc->local_module).holds;
  return conclude(a == b, json{{"maximal_multiple", elem_json(*inst.ring, *mm)},
                               {"idempotent", elem_json(*inst.ring, loc->idempotent)},
                               {"fully_s_idempotent", a},
                               {"local_fully_idempotent", b}});
}

inline Evaluation thm_2_18(const Instance& inst) {
  const Module& m = *inst.module;
  const MultSet& s = inst.s;
  if (!is_s_multiplication(m, s).holds) return skip("M is not an S-multiplication module");
  const auto& subs = inst.analysis->submodules();
  const auto& as_mod = inst.analysis->as_modules();
  const auto& inner = inst.analysis->inner_pairs();
  const auto& outer = inst.analysis->outer_pairs();
  const Elem p = product_of_elements(s);
  auto uniform = [&](const ModuleAnalysis::Pairs& pairs) {
    for (const auto& [lhs, rhs] : pairs)
      if (!scaled_within(m, p, lhs, rhs)) return false;
    return true;
  };
  std::size_t pure = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const bool a = is_s_pure_submodule(m, s, p, subs[i]).holds;
    const bool nm = is_s_multiplication(*as_mod[i].value, s).holds;
    const bool b = nm && is_s_idempotent_submodule(m, s, p, subs[i]).holds;
    const bool c = nm && uniform(inner[i]);
    const bool d = nm && uniform(outer[i]);
    if (!(a == b && b == c && c == d)) {
      json detail = bools({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"n_s_multiplication", nm}});
      detail["submodule"] = gens_json(m, subs[i]);
      return conclude(false, std::move(detail));
    }
    pure += a;
  }
  return conclude(true, json{{"submodules", subs.size()}, {"s_pure_submodules", pure}});
}

inline Evaluation prop_2_19(const Instance& inst) {
  const Module& m = *inst.module;
  if (!is_s_multiplication(m, inst.s).holds) return skip("M is not an S-multiplication module");
  const Elem p = product_of_elements(inst.s);
  std::size_t copure = 0;
  for (const auto& n : inst.analysis->submodules()) {
    if (!is_s_copure_submodule(m, inst.s, p, n).holds) continue;
    ++copure;
    const Verdict v = is_s_idempotent_submodule(m, inst.s, p, n);
    if (!v.holds) return conclude(false, json{{"submodule", gens_json(m, n)}, {"s_idempotent", verdict_json(m, v)}});
  }
  return conclude(true, json{{"s_copure_submodules", copure}});
}

inline Evaluation cor_2_20(const Instance& inst) {
  const Module& m = *inst.module;
  const bool fs = fully(m, inst.s).holds;
  const Verdict pure = is_fully(FullyProperty::s_pure, m, inst.s);
  const bool mult = is_s_multiplication(m, inst.s).holds;
  if (!fs && !(mult && pure.holds)) return skip("M is neither fully S-idempotent nor S-multiplication and fully S-pure");
  const bool ok = (!fs || pure.holds) && (!(mult && pure.holds) || fs);
  return conclude(ok, json{{"fully_s_idempotent", fs}, {"fully_s_pure", verdict_json(m, pure)}, {"s_multiplication", mult}});
}

}  // namespace checks

/// Every registered check, main statements first, then converses.
inline const std::vector<TheoremCheck>& registry() {
  static const std::vector<TheoremCheck> all{
      {"example-2.6", "Ann(M) meets S => M fully S-idempotent", false, checks::example_2_6},
      {"prop-2.3", "fully idempotent => fully S-idempotent; equivalent when S is inside U(R)", false, checks::prop_2_3},
      {"lemma-2.5", "fully S-idempotent => S-multiplication", false, checks::lemma_2_5},
      {"prop-2.8a", "fully S1-idempotent and S1 inside S2 => fully S2-idempotent", false, checks::prop_2_8a},
      {"prop-2.8b", "fully S-idempotent <=> fully S*-idempotent", false, checks::prop_2_8b},
      {"prop-2.8c", "fully S-idempotent => every submodule fully S-idempotent", false, checks::prop_2_8c},
      {"thm-2.8", "fully idempotent <=> fully (R-p)-idempotent for all primes <=> all maximal <=> all maximal in the support",
       false, checks::thm_2_8},
      {"prop-2.9", "N S-idempotent => sN inside Hom(M,N)N for some s", false, checks::prop_2_9},
      {"thm-2.11", "fully S-idempotent <=> cyclic submodules <=> elements <=> pairwise intersections", false,
       checks::thm_2_11},
      {"thm-2.12", "M1 x M2 fully (S1 x S2)-idempotent <=> both factors are", false, checks::thm_2_12},
      {"thm-2.13", "product of n factors fully S-idempotent <=> every factor is (n <= 3)", false, checks::thm_2_13},
      {"thm-2.14", "N fully S-idempotent <=> 0xN fully (Sx0)-idempotent <=> 0xN fully (SxM)-idempotent", false,
       checks::thm_2_14},
      {"prop-2.15", "epimorphic images of fully S-idempotent modules; converse when t ker f = 0", false, checks::prop_2_15},
      {"cor-2.15", "M/N fully S-idempotent; converse when tN = 0", false, checks::cor_2_15},
      {"prop-2.16", "T^-1 M fully S~-idempotent; fully idempotent when S is inside T*", false, checks::prop_2_16},
      {"cor-2.17", "fully S-idempotent <=> S^-1 M fully idempotent", false, checks::cor_2_17},
      {"thm-2.18", "over an S-multiplication module: S-pure <=> (b) <=> (c) <=> (d)", false, checks::thm_2_18},
      {"prop-2.19", "over an S-multiplication module: S-copure => S-idempotent", false, checks::prop_2_19},
      {"cor-2.20", "fully S-idempotent => fully S-pure; converse for S-multiplication modules", false, checks::cor_2_20},
      {"lemma-2.5-converse", "S-multiplication => fully S-idempotent (false in general)", true,
       checks::lemma_2_5_converse},
      {"prop-2.3-converse", "fully S-idempotent => fully idempotent (false in general)", true, checks::prop_2_3_converse},
      {"prop-2.9-converse", "sN inside Hom(M,N)N => N S-idempotent (false in general)", true, checks::prop_2_9_converse},
  };
  return all;
}

inline const TheoremCheck& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownCheck(id);
}

/// Ids of the statements that should hold everywhere.
inline std::vector<std::string> main_check_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry())
    if (!c.converse) out.push_back(c.id);
  return out;
}

}  // namespace sidem::harness
