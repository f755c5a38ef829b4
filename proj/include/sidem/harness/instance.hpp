#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "../io/instance_file.hpp"
#include "../localize.hpp"
#include "../props.hpp"

namespace sidem::harness {

using json = nlohmann::ordered_json;

/// Data about one module that does not depend on S, built on first use and
/// shared by every instance over that module. Safe to use from several threads.
class ModuleAnalysis {
 public:
  using Pairs = std::vector<std::pair<Submodule, Submodule>>;

  explicit ModuleAnalysis(ModulePtr m) : m_(std::move(m)) {}

  const Module& module() const noexcept { return *m_; }
  const ModulePtr& module_ptr() const noexcept { return m_; }
  const std::vector<Submodule>& submodules() const { return enumerate_submodules(*m_); }

  /// Each submodule N as an R-module of its own.
  const std::vector<Presented<ModulePtr>>& as_modules() const {
    std::call_once(as_modules_once_, [&] {
      for (const auto& n : submodules()) as_modules_.push_back(submodule_as_module(*m_, n));
    });
    return as_modules_;
  }

  const std::vector<Quotient>& quotients() const {
    std::call_once(quotients_once_, [&] {
      for (const auto& n : submodules()) quotients_.push_back(epi_image(*m_, n));
    });
    return quotients_;
  }

  /// Hom_R(M, N) N for each submodule N.
  const std::vector<Submodule>& hom_sums() const {
    std::call_once(hom_once_, [&] {
      for (const auto& n : submodules()) hom_sums_.push_back(hom_image_sum(*m_, n));
    });
    return hom_sums_;
  }

  /// The distinct cyclic submodules Rx.
  const std::vector<Submodule>& cyclic() const {
    std::call_once(cyclic_once_, [&] {
      std::vector<char> seen(submodules().size(), 0);
      for (Elem x = 0; x < m_->size(); ++x) {
        std::size_t i = submodule_index(*m_, submodule_generated(*m_, {x}));
        if (!seen[i]) {
          seen[i] = 1;
          cyclic_.push_back(submodules()[i]);
        }
      }
    });
    return cyclic_;
  }

  /// (N cap K, (N:M)(K:M)M) over unordered pairs of submodules.
  const Pairs& intersection_pairs() const {
    std::call_once(pairs_once_, [&] {
      const auto& subs = submodules();
      const Submodule whole = whole_module(*m_);
      std::vector<Ideal> col;
      for (const auto& n : subs) col.push_back(colon_into(*m_, n));
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i; j < subs.size(); ++j)
          pairs_.emplace_back(sub_intersect(*m_, subs[i], subs[j]),
                              ideal_times_submodule(*m_, col[i], colon_times(*m_, subs[j])));
    });
    return pairs_;
  }

  /// For each N: pairs (K, (N:M)K) over submodules K of N.
  const std::vector<Pairs>& inner_pairs() const {
    build_nested();
    return inner_;
  }

  /// For each N: pairs ((K:N)N, (K:M)(N:M)M) over all submodules K.
  const std::vector<Pairs>& outer_pairs() const {
    build_nested();
    return outer_;
  }

  const Idealization& idealized() const {
    std::call_once(ideal_once_, [&] { idealization_ = std::make_unique<Idealization>(idealization(m_->ring_ptr(), m_)); });
    return *idealization_;
  }

  /// For each N, the ideal 0 x N of R x M as a module over R x M.
  const std::vector<Presented<ModulePtr>>& zero_times() const {
    std::call_once(zero_times_once_, [&] {
      const Idealization& ext = idealized();
      const Ideal zero = zero_ideal(m_->ring());
      for (const auto& n : submodules())
        zero_times_.push_back(ideal_as_module(ext.ring, homogeneous_ideal(zero, n, ext.tag)));
    });
    return zero_times_;
  }

  /// eR and eM for an idempotent e, cached by e.
  std::shared_ptr<const LocalizationResult> localization(Elem e) const {
    std::shared_ptr<Entry> entry;
    {
      std::lock_guard lock(loc_mutex_);
      auto& slot = localizations_[e];
      if (!slot) slot = std::make_shared<Entry>();
      entry = slot;
    }
    std::call_once(entry->once, [&] {
      entry->value = std::make_shared<const LocalizationResult>(localize_at(m_->ring(), e, m_.get()));
    });
    return entry->value;
  }

  std::shared_ptr<const LocalizationResult> localization(const MultSet& s) const {
    return localization(idempotent_power(*s.ring, product_of_elements(s)));
  }

 private:
  struct Entry {
    std::once_flag once;
    std::shared_ptr<const LocalizationResult> value;
  };

  void build_nested() const {
    std::call_once(nested_once_, [&] {
      const auto& subs = submodules();
      std::vector<Ideal> col;
      for (const auto& n : subs) col.push_back(colon_into(*m_, n));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const auto& n = subs[i];
        Pairs inner, outer;
        for (std::size_t j = 0; j < subs.size(); ++j) {
          const auto& k = subs[j];
          if (k.is_subset_of(n)) inner.emplace_back(k, ideal_times_submodule(*m_, col[i], k));
          outer.emplace_back(ideal_times_submodule(*m_, colon(*m_, k, n), n),
                             ideal_times_submodule(*m_, col[j], colon_times(*m_, n)));
        }
        inner_.push_back(std::move(inner));
        outer_.push_back(std::move(outer));
      }
    });
  }

  ModulePtr m_;
  mutable std::once_flag as_modules_once_, quotients_once_, hom_once_, cyclic_once_, pairs_once_, nested_once_,
      ideal_once_, zero_times_once_;
  mutable std::vector<Presented<ModulePtr>> as_modules_;
  mutable std::vector<Quotient> quotients_;
  mutable std::vector<Submodule> hom_sums_;
  mutable std::vector<Submodule> cyclic_;
  mutable Pairs pairs_;
  mutable std::vector<Pairs> inner_, outer_;
  mutable std::unique_ptr<Idealization> idealization_;
  mutable std::vector<Presented<ModulePtr>> zero_times_;
  mutable std::mutex loc_mutex_;
  mutable std::map<Elem, std::shared_ptr<Entry>> localizations_;
};

/// One (R, M, S) triple of a corpus, with where it came from.
struct Instance {
  std::string id;
  std::string family;
  json params = json::object();
  std::string mult_label;  // one, units, closure(x), complement(m), file
  json ring_spec;
  json module_spec;
  RingPtr ring;
  ModulePtr module;
  MultSet s;
  std::vector<ModulePtr> factors;  // componentwise factors when M is a product module
  std::optional<Submodule> submodule;
  std::shared_ptr<const ModuleAnalysis> analysis;

  bool degenerate() const noexcept { return s.degenerate(); }

  /// Instance-file form; reloads to the same ring, module and S.
  json spec() const {
    json out{{"ring", ring_spec},
             {"module", module_spec},
             {"mult_set", {{"generators", io::ring_elements_json(*ring, s.generators)}}}};
    if (submodule) out["submodule"] = {{"generators", io::module_elements_json(*module, submodule->generators)}};
    return out;
  }
};

// Compact JSON for witnesses.

inline json elem_json(const Ring& r, Elem x) { return r.coords(x); }
inline json elem_json(const Module& m, Elem x) { return m.coords(x); }

inline json gens_json(const Module& m, const Submodule& n) {
  return io::module_elements_json(m, n.generators);
}

inline json gens_json(const Ring& r, const Ideal& i) { return io::ring_elements_json(r, i.generators); }

inline json set_json(const Ring& r, const ElementSet& s) { return io::ring_elements_json(r, s.elements()); }

inline json verdict_json(const Module& m, const Verdict& v) {
  json out{{"holds", v.holds}};
  if (v.holds && v.witness) {
    if (v.witness->s) out["s"] = elem_json(m.ring(), *v.witness->s);
    if (v.witness->a) out["a"] = elem_json(m.ring(), *v.witness->a);
  }
  if (!v.holds && v.counterexample) {
    const auto& c = *v.counterexample;
    if (c.submodule) out["submodule"] = gens_json(m, *c.submodule);
    if (c.ideal) out["ideal"] = gens_json(m.ring(), *c.ideal);
    if (c.element) out["element"] = elem_json(m, *c.element);
    if (c.s) out["s"] = elem_json(m.ring(), *c.s);
  }
  return out;
}

/// Wraps a loaded instance file for the harness.
inline Instance from_file(const io::LoadedInstance& li, const json& spec, std::string id) {
  Instance out;
  out.id = std::move(id);
  out.family = "file";
  out.mult_label = "file";
  out.ring_spec = spec.at("ring");
  out.module_spec = spec.contains("module") ? spec["module"] : json{{"kind", "regular"}};
  out.ring = li.ring;
  out.module = li.module;
  out.s = li.mult_set;
  out.factors = li.factors;
  out.submodule = li.submodule;
  out.analysis = std::make_shared<ModuleAnalysis>(li.module);
  return out;
}

}  // namespace sidem::harness
