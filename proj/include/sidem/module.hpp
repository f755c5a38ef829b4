#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ideal.hpp"
#include "ring.hpp"

namespace sidem {

/// A finite R-module given by additive cyclic generators e_1..e_k of the
/// given orders and the action of each ring generator on each module
/// generator: action_table[i][j] = g_i * e_j.
struct ModulePresentation {
  std::vector<std::uint32_t> additive_orders;
  std::vector<std::vector<Coords>> action_table;

  friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;
};

namespace detail {

struct ModuleMemo {
  std::once_flag submodules_once;
  std::vector<Submodule> submodules;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  std::once_flag targets_once;
  std::vector<Ideal> colon;              // (N :_R M)
  std::vector<Submodule> colon_times;    // (N :_R M) M
  std::vector<Submodule> colon_sq_times; // (N :_R M)^2 M

  // Per (submodule, ideal) pairs, indexed [n][i] over enumerate_ideals(R).
  std::once_flag pure_once;
  std::vector<std::vector<std::pair<Submodule, Submodule>>> pure;    // (N cap IM, IN)
  std::once_flag copure_once;
  std::vector<std::vector<std::pair<Submodule, Submodule>>> copure;  // ((N :_M I), N + (0 :_M I))
};

}  // namespace detail

class Module;
using ModulePtr = std::shared_ptr<const Module>;

class Module {
  struct Private {};

 public:
  Module(Private, RingPtr ring, ModulePresentation pres, const Caps& caps);

  static ModulePtr create(RingPtr ring, ModulePresentation pres, Validation validation = Validation::exhaustive,
                          const Caps& caps = default_caps());

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const ModulePresentation& presentation() const noexcept { return pres_; }
  const detail::Radix& radix() const noexcept { return radix_; }

  std::size_t size() const noexcept { return radix_.size(); }
  std::size_t generator_count() const noexcept { return radix_.rank(); }
  Elem generator(std::size_t j) const noexcept { return radix_.unit(j); }

  Coords coords(Elem m) const { return radix_.coords(m); }
  Elem element(std::span<const std::uint32_t> c) const {
    if (!radix_.valid_coords(c)) throw PresentationError("coordinate vector does not fit the module");
    return radix_.index(c);
  }
  Elem element(std::initializer_list<std::uint32_t> c) const {
    return element(std::span<const std::uint32_t>(c.begin(), c.size()));
  }
  std::string format(Elem m) const { return format_coords(coords(m)); }

  Elem add(Elem a, Elem b) const noexcept {
    return add_table_.empty() ? radix_.add_coords(a, b) : add_table_[a * size() + b];
  }
  Elem neg(Elem a) const noexcept { return radix_.neg_coords(a); }

  /// r * m for a ring element r.
  Elem act(Elem r, Elem m) const {
    return act_table_.empty() ? detail::bilinear(ring_->radix(), radix_, radix_, pres_.action_table, r, m)
                              : act_table_[static_cast<std::size_t>(r) * size() + m];
  }

  detail::ModuleMemo& memo() const { return *memo_; }

  friend bool operator==(const Module& a, const Module& b) noexcept {
    return *a.ring_ == *b.ring_ && a.pres_ == b.pres_;
  }

 private:
  void validate(Validation validation, const Caps& caps);

  RingPtr ring_;
  ModulePresentation pres_;
  detail::Radix radix_;
  std::vector<Elem> add_table_;
  std::vector<Elem> act_table_;
  std::shared_ptr<detail::ModuleMemo> memo_;
};

inline Module::Module(Private, RingPtr ring, ModulePresentation pres, const Caps& caps)
    : ring_(std::move(ring)),
      pres_(std::move(pres)),
      radix_(pres_.additive_orders),
      memo_(std::make_shared<detail::ModuleMemo>()) {
  const std::size_t n = radix_.size();
  const std::size_t rn = ring_->size();
  if (n <= caps.table_cap) {
    add_table_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) add_table_[a * n + b] = radix_.add_coords(a, b);
  }
  if (rn * n <= (std::size_t{1} << 22)) {
    act_table_.resize(rn * n);
    for (Elem r = 0; r < rn; ++r)
      for (Elem m = 0; m < n; ++m)
        act_table_[r * n + m] = detail::bilinear(ring_->radix(), radix_, radix_, pres_.action_table, r, m);
  }
}

inline ModulePtr Module::create(RingPtr ring, ModulePresentation pres, Validation validation, const Caps& caps) {
  const std::size_t k = pres.additive_orders.size();
  if (k == 0) throw PresentationError("module needs at least one additive generator");
  std::size_t n = 1;
  for (auto d : pres.additive_orders) {
    if (d == 0) throw PresentationError("additive orders must be >= 1");
    n *= d;
    if (n > caps.size_cap) throw SizeExceeded("module", n, caps.size_cap);
  }
  detail::Radix radix(pres.additive_orders);
  if (pres.action_table.size() != ring->generator_count())
    throw PresentationError("action_table: expected " + std::to_string(ring->generator_count()) +
                            " rows (one per ring generator)");
  for (std::size_t i = 0; i < pres.action_table.size(); ++i) {
    if (pres.action_table[i].size() != k)
      throw PresentationError("action_table[" + std::to_string(i) + "]: expected " + std::to_string(k) + " entries");
    for (std::size_t j = 0; j < k; ++j)
      if (!radix.valid_coords(pres.action_table[i][j]))
        throw PresentationError("action_table[" + std::to_string(i) + "][" + std::to_string(j) +
                                "]: coordinates do not fit the additive orders");
  }
  auto m = std::make_shared<Module>(Private{}, std::move(ring), std::move(pres), caps);
  m->validate(validation, caps);
  return m;
}

inline void Module::validate(Validation validation, const Caps& caps) {
  const Ring& r = *ring_;
  const std::size_t k = generator_count();
  const std::size_t rk = r.generator_count();
  const auto& rd = r.presentation().additive_orders;
  const auto& md = pres_.additive_orders;

  for (std::size_t j = 0; j < k; ++j) {
    Elem e = generator(j);
    if (act(r.one(), e) != e) throw AxiomViolation("unitality", {r.one(), e}, "1*" + format(e) + " = " + format(act(r.one(), e)));
  }
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < k; ++c) {
        std::uint64_t t = pres_.action_table[i][j][c];
        if ((rd[i] * t) % md[c] != 0 || (md[j] * t) % md[c] != 0)
          throw AxiomViolation("distributivity", {r.generator(i), generator(j)},
                               "action of g" + std::to_string(i) + " on e" + std::to_string(j) +
                                   " is not compatible with the additive orders");
      }
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t l = 0; l < rk; ++l)
      for (std::size_t j = 0; j < k; ++j) {
        Elem a = r.generator(i), b = r.generator(l), e = generator(j);
        if (act(r.mul(a, b), e) != act(a, act(b, e)))
          throw AxiomViolation("associativity", {a, b, e}, "generator triple");
      }

  if (validation == Validation::structural) return;

  const std::size_t n = size();
  const std::size_t rn = r.size();
  if (n <= caps.binary_check_cap)
    for (Elem m = 0; m < n; ++m)
      if (act(r.one(), m) != m) throw AxiomViolation("unitality", {r.one(), m}, "1*" + format(m));

  auto check = [&](Elem a, Elem b, Elem m, Elem m2) {
    if (act(r.mul(a, b), m) != act(a, act(b, m))) throw AxiomViolation("associativity", {a, b, m}, "element triple");
    if (act(r.add(a, b), m) != add(act(a, m), act(b, m)))
      throw AxiomViolation("distributivity", {a, b, m}, "(r+r')m");
    if (act(a, add(m, m2)) != add(act(a, m), act(a, m2)))
      throw AxiomViolation("distributivity", {a, m, m2}, "r(m+m')");
  };
  const std::size_t cube = caps.triple_check_cap * caps.triple_check_cap * caps.triple_check_cap;
  if (rn * rn * n <= cube && rn * n * n <= cube) {
    for (Elem a = 0; a < rn; ++a)
      for (Elem b = 0; b < rn; ++b)
        for (Elem m = 0; m < n; ++m) check(a, b, m, m);
    for (Elem a = 0; a < rn; ++a)
      for (Elem m = 0; m < n; ++m)
        for (Elem m2 = 0; m2 < n; ++m2)
          if (act(a, add(m, m2)) != add(act(a, m), act(a, m2)))
            throw AxiomViolation("distributivity", {a, m, m2}, "r(m+m')");
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < caps.sampled_triples; ++t)
      check(static_cast<Elem>(rng() % rn), static_cast<Elem>(rng() % rn), static_cast<Elem>(rng() % n),
            static_cast<Elem>(rng() % n));
  }
}

/// Z/d as a module over Z/n (d | n), or the regular module when d == n.
inline ModulePtr cyclic_module(const RingPtr& zn, std::uint32_t d) {
  const std::uint32_t n = zn->presentation().additive_orders.at(0);
  if (zn->generator_count() != 1 || d == 0 || n % d != 0)
    throw PresentationError("Z/d over Z/n needs d | n");
  return Module::create(zn, ModulePresentation{{d}, {{{d == 1 ? 0U : 1U}}}});
}

/// R as a module over itself.
inline ModulePtr regular_module(const RingPtr& r) {
  const auto& p = r->presentation();
  return Module::create(r, ModulePresentation{p.additive_orders, p.mul_table}, Validation::structural);
}

namespace detail {

inline auto module_add(const Module& m) {
  return [&m](Elem a, Elem b) { return m.add(a, b); };
}

inline auto module_act(const Module& m) {
  return [&m](std::size_t i, Elem x) { return m.act(m.ring().generator(i), x); };
}

inline Spanner<decltype(module_add(std::declval<const Module&>())), decltype(module_act(std::declval<const Module&>()))>
module_spanner(const Module& m) {
  return {m.size(), module_add(m), m.ring().generator_count(), module_act(m)};
}

}  // namespace detail

/// Smallest submodule containing `gens`.
inline Submodule submodule_generated(const Module& m, std::span<const Elem> gens) {
  auto sp = detail::module_spanner(m);
  for (Elem g : gens) sp.adjoin(g);
  return sp.finish<SubmoduleTag>();
}

inline Submodule submodule_generated(const Module& m, std::initializer_list<Elem> gens) {
  return submodule_generated(m, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Wraps a set already known to be a submodule, choosing a short generator list.
inline Submodule submodule_from_set(const Module& m, const ElementSet& members) {
  auto sp = detail::module_spanner(m);
  for (Elem e : members) sp.adjoin(e);
  return sp.finish<SubmoduleTag>();
}

inline Submodule zero_submodule(const Module& m) { return submodule_generated(m, {}); }

inline Submodule whole_module(const Module& m) {
  std::vector<Elem> gens;
  for (std::size_t j = 0; j < m.generator_count(); ++j) gens.push_back(m.generator(j));
  return submodule_generated(m, gens);
}

/// True when `members` is closed under addition and the ring action.
inline bool is_submodule(const Module& m, const ElementSet& members) {
  if (!members.contains(0)) return false;
  for (Elem a : members) {
    for (Elem b : members)
      if (!members.contains(m.add(a, b))) return false;
    for (std::size_t i = 0; i < m.ring().generator_count(); ++i)
      if (!members.contains(m.act(m.ring().generator(i), a))) return false;
  }
  return true;
}

/// Every submodule of M in canonical order. Cached per module.
inline const std::vector<Submodule>& enumerate_submodules(const Module& m, const Caps& caps = default_caps()) {
  if (m.size() > caps.enumeration_cap) throw SizeExceeded("submodule enumeration", m.size(), caps.enumeration_cap);
  auto& memo = m.memo();
  std::call_once(memo.submodules_once, [&] {
    memo.submodules = detail::enumerate_spans<SubmoduleTag>(m.size(), detail::module_add(m),
                                                            m.ring().generator_count(), detail::module_act(m));
    for (std::size_t i = 0; i < memo.submodules.size(); ++i) memo.index.emplace(memo.submodules[i].elements, i);
  });
  return memo.submodules;
}

/// Position of N in enumerate_submodules(M).
inline std::size_t submodule_index(const Module& m, const Submodule& n) {
  enumerate_submodules(m);
  return m.memo().index.at(n.elements);
}

/// (K :_R N) = {r in R : rN is contained in K}.
inline Ideal colon(const Module& m, const Submodule& k, const Submodule& n) {
  const Ring& r = m.ring();
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool inside = true;
    for (Elem g : n.generators)
      if (!k.contains(m.act(x, g))) {
        inside = false;
        break;
      }
    if (inside) out.insert(x);
  }
  out.normalize();
  return ideal_from_set(r, out);
}

/// (N :_R M).
inline Ideal colon_into(const Module& m, const Submodule& n) { return colon(m, n, whole_module(m)); }

/// Ann_R(M) = (0 :_R M).
inline Ideal annihilator(const Module& m) { return colon_into(m, zero_submodule(m)); }

/// (N :_M I) = {m in M : Im is contained in N}.
inline Submodule colon_in_module(const Module& m, const Submodule& n, const Ideal& i) {
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool inside = true;
    for (Elem a : i.generators)
      if (!n.contains(m.act(a, x))) {
        inside = false;
        break;
      }
    if (inside) out.insert(x);
  }
  out.normalize();
  return submodule_from_set(m, out);
}

/// IN, generated by products of generators.
inline Submodule ideal_times_submodule(const Module& m, const Ideal& i, const Submodule& n) {
  auto sp = detail::module_spanner(m);
  for (Elem a : i.generators)
    for (Elem x : n.generators) sp.adjoin(m.act(a, x));
  return sp.finish<SubmoduleTag>();
}

/// sN for a single ring element s.
inline Submodule scalar_times_submodule(const Module& m, Elem s, const Submodule& n) {
  auto sp = detail::module_spanner(m);
  for (Elem x : n.generators) sp.adjoin(m.act(s, x));
  return sp.finish<SubmoduleTag>();
}

/// Whether sA is contained in B; generators of A suffice.
inline bool scaled_within(const Module& m, Elem s, const Submodule& a, const Submodule& b) {
  for (Elem x : a.generators)
    if (!b.contains(m.act(s, x))) return false;
  return true;
}

inline Submodule sub_sum(const Module& m, const Submodule& a, const Submodule& b) {
  auto sp = detail::module_spanner(m);
  sp.adjoin_all(a.generators);
  sp.adjoin_all(b.generators);
  return sp.finish<SubmoduleTag>();
}

inline Submodule sub_intersect(const Module& m, const Submodule& a, const Submodule& b) {
  return submodule_from_set(m, a.elements.intersect(b.elements));
}

namespace detail {

/// Fills the per-submodule colon data of the memo.
inline void ensure_colon_targets(const Module& m) {
  const auto& subs = enumerate_submodules(m);
  auto& memo = m.memo();
  std::call_once(memo.targets_once, [&] {
    const Submodule whole = whole_module(m);
    for (const auto& n : subs) {
      Ideal c = colon(m, n, whole);
      Submodule cm = ideal_times_submodule(m, c, whole);
      Submodule c2m = ideal_times_submodule(m, c, cm);
      memo.colon.push_back(std::move(c));
      memo.colon_times.push_back(std::move(cm));
      memo.colon_sq_times.push_back(std::move(c2m));
    }
  });
}

}  // namespace detail

/// (N :_R M)^2 M, using the per-module cache when N is one of the enumerated submodules.
inline Submodule colon_square_times(const Module& m, const Submodule& n) {
  if (m.size() <= default_caps().enumeration_cap) {
    detail::ensure_colon_targets(m);
    auto it = m.memo().index.find(n.elements);
    if (it != m.memo().index.end()) return m.memo().colon_sq_times[it->second];
  }
  Ideal c = colon_into(m, n);
  return ideal_times_submodule(m, c, ideal_times_submodule(m, c, whole_module(m)));
}

/// (N :_R M) M, cached like colon_square_times.
inline Submodule colon_times(const Module& m, const Submodule& n) {
  if (m.size() <= default_caps().enumeration_cap) {
    detail::ensure_colon_targets(m);
    auto it = m.memo().index.find(n.elements);
    if (it != m.memo().index.end()) return m.memo().colon_times[it->second];
  }
  return ideal_times_submodule(m, colon_into(m, n), whole_module(m));
}

/// A module homomorphism M -> M' given by the images of M's additive generators.
struct Homomorphism {
  std::vector<Elem> images;
};

/// Image of x under the homomorphism determined by generator images.
inline Elem apply_hom(const Module& source, const Module& target, const Homomorphism& f, Elem x) {
  Elem out = 0;
  for (std::size_t j = 0; j < source.generator_count(); ++j) {
    std::uint32_t c = source.radix().coord(x, j);
    for (std::uint32_t t = 0; t < c; ++t) out = target.add(out, f.images[j]);
  }
  return out;
}

/// Calls `visit` for every R-homomorphism M -> M whose image lies in
/// `codomain`. Assignments of generator images are rejected when they break
/// a generator order relation or the action on generators.
template <class Visit>
std::size_t for_each_hom_into(const Module& m, const Submodule& codomain, Visit visit,
                              const Caps& caps = default_caps()) {
  const std::size_t k = m.generator_count();
  const auto& orders = m.presentation().additive_orders;
  std::vector<std::vector<Elem>> candidates(k);
  double total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (Elem y : codomain.elements) {
      Elem acc = 0;
      for (std::uint32_t t = 0; t < orders[j]; ++t) acc = m.add(acc, y);
      if (acc == 0) candidates[j].push_back(y);
    }
    total *= static_cast<double>(candidates[j].size());
  }
  if (total > static_cast<double>(caps.hom_cap))
    throw SizeExceeded("Hom enumeration", static_cast<std::size_t>(total), caps.hom_cap);

  const Ring& r = m.ring();
  std::vector<std::size_t> pos(k, 0);
  Homomorphism f{std::vector<Elem>(k)};
  std::size_t count = 0;
  for (;;) {
    for (std::size_t j = 0; j < k; ++j) f.images[j] = candidates[j][pos[j]];
    bool ok = true;
    for (std::size_t i = 0; i < r.generator_count() && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        Elem lhs = apply_hom(m, m, f, m.act(r.generator(i), m.generator(j)));
        ok = lhs == m.act(r.generator(i), f.images[j]);
      }
    if (ok) {
      ++count;
      visit(f);
    }
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++pos[j] < candidates[j].size()) break;
      pos[j] = 0;
      if (j == 0) return count;
    }
    if (k == 0) return count;
  }
}

/// Hom_R(M, N) N, the sum of phi(N) over all homomorphisms phi: M -> N.
inline Submodule hom_image_sum(const Module& m, const Submodule& n, const Caps& caps = default_caps()) {
  auto sp = detail::module_spanner(m);
  for_each_hom_into(
      m, n,
      [&](const Homomorphism& f) {
        for (Elem x : n.generators) sp.adjoin(apply_hom(m, m, f, x));
      },
      caps);
  return sp.finish<SubmoduleTag>();
}

}  // namespace sidem
