#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "span.hpp"

namespace sidem {

namespace detail {

/// All subsets of {0..n-1} closed under `add` and the `act` family, found by
/// breadth-first cyclic extension: every closed set is reached from {0} by
/// adjoining one cyclic span at a time. Output is in canonical order
/// (size, then members).
template <class Tag, class Add, class Act>
std::vector<GeneratedSet<Tag>> enumerate_spans(std::size_t n, Add add, std::size_t n_actions, Act act) {
  // One representative per distinct cyclic span.
  std::vector<Elem> reps;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem x = 1; x < n; ++x) {
      Spanner sp(n, add, n_actions, act);
      sp.adjoin(x);
      if (seen.insert(sp.set()).second) reps.push_back(x);
    }
  }

  std::vector<GeneratedSet<Tag>> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  {
    Spanner zero(n, add, n_actions, act);
    found.push_back(zero.template finish<Tag>());
    seen.insert(found.back().elements);
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem x : reps) {
      if (found[head].contains(x)) continue;
      Spanner sp(found[head].elements, add, n_actions, act);
      sp.adjoin(x);
      if (seen.contains(sp.set())) continue;
      GeneratedSet<Tag> next{sp.set(), found[head].generators};
      next.generators.push_back(x);
      seen.insert(next.elements);
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const GeneratedSet<Tag>& a, const GeneratedSet<Tag>& b) { return a.elements < b.elements; });
  return found;
}

inline auto ring_add(const Ring& r) {
  return [&r](Elem a, Elem b) { return r.add(a, b); };
}

inline auto ring_act(const Ring& r) {
  return [&r](std::size_t i, Elem x) { return r.mul(r.generator(i), x); };
}

}  // namespace detail

/// Smallest ideal containing `gens`.
inline Ideal ideal_generated(const Ring& r, std::span<const Elem> gens) {
  detail::Spanner sp(r.size(), detail::ring_add(r), r.generator_count(), detail::ring_act(r));
  for (Elem g : gens) sp.adjoin(g);
  return sp.finish<IdealTag>();
}

inline Ideal ideal_generated(const Ring& r, std::initializer_list<Elem> gens) {
  return ideal_generated(r, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Wraps a set already known to be an ideal, choosing a short generator list.
inline Ideal ideal_from_set(const Ring& r, const ElementSet& members) {
  detail::Spanner sp(r.size(), detail::ring_add(r), r.generator_count(), detail::ring_act(r));
  for (Elem e : members) sp.adjoin(e);
  return sp.finish<IdealTag>();
}

inline Ideal zero_ideal(const Ring& r) { return ideal_generated(r, {}); }
inline Ideal unit_ideal(const Ring& r) { return ideal_generated(r, {r.one()}); }

/// U(R), the units of R. Always contains 1.
inline const ElementSet& units(const Ring& r) {
  auto& m = r.memo();
  std::call_once(m.units_once, [&] {
    ElementSet u(r.size());
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one()) {
          u.insert(a);
          break;
        }
    u.normalize();
    m.units = std::move(u);
  });
  return m.units;
}

/// t | s in R, i.e. s lies in tR.
inline bool divides(const Ring& r, Elem t, Elem s) {
  for (Elem x = 0; x < r.size(); ++x)
    if (r.mul(t, x) == s) return true;
  return false;
}

/// Every ideal of R in canonical order (size, then members).
inline const std::vector<Ideal>& enumerate_ideals(const Ring& r, const Caps& caps = default_caps()) {
  if (r.size() > caps.enumeration_cap) throw SizeExceeded("ideal enumeration", r.size(), caps.enumeration_cap);
  auto& m = r.memo();
  std::call_once(m.ideals_once, [&] {
    m.ideals = detail::enumerate_spans<IdealTag>(r.size(), detail::ring_add(r), r.generator_count(),
                                                 detail::ring_act(r));
  });
  return m.ideals;
}

/// Proper ideals that are maximal under inclusion among proper ideals.
inline const std::vector<Ideal>& maximal_ideals(const Ring& r, const Caps& caps = default_caps()) {
  const auto& all = enumerate_ideals(r, caps);
  auto& m = r.memo();
  std::call_once(m.maximal_once, [&] {
    std::vector<Ideal> proper;
    for (const auto& i : all)
      if (!i.contains(r.one())) proper.push_back(i);
    for (const auto& i : proper) {
      bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Ideal& j) {
        return j.size() > i.size() && i.is_subset_of(j);
      });
      if (maximal) m.maximal.push_back(i);
    }
  });
  return m.maximal;
}

/// For a proper ideal P, the first pair (a, b) in canonical order with
/// a, b outside P and ab inside P; nullopt when P is prime.
inline std::optional<std::pair<Elem, Elem>> primality_witness(const Ring& r, const Ideal& p) {
  for (Elem a = 0; a < r.size(); ++a) {
    if (p.contains(a)) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (p.contains(b)) continue;
      if (p.contains(r.mul(a, b))) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_prime(const Ring& r, const Ideal& p) {
  return !p.contains(r.one()) && !primality_witness(r, p);
}

/// Prime ideals; in a finite ring these coincide with the maximal ideals.
inline std::vector<Ideal> prime_ideals(const Ring& r, const Caps& caps = default_caps()) {
  std::vector<Ideal> out;
  for (const auto& i : enumerate_ideals(r, caps))
    if (is_prime(r, i)) out.push_back(i);
  return out;
}

/// IJ, generated by products of generators.
inline Ideal ideal_product(const Ring& r, const Ideal& i, const Ideal& j) {
  detail::Spanner sp(r.size(), detail::ring_add(r), r.generator_count(), detail::ring_act(r));
  for (Elem a : i.generators)
    for (Elem b : j.generators) sp.adjoin(r.mul(a, b));
  return sp.finish<IdealTag>();
}

inline Ideal ideal_sum(const Ring& r, const Ideal& i, const Ideal& j) {
  detail::Spanner sp(r.size(), detail::ring_add(r), r.generator_count(), detail::ring_act(r));
  sp.adjoin_all(i.generators);
  sp.adjoin_all(j.generators);
  return sp.finish<IdealTag>();
}

inline Ideal ideal_intersect(const Ring& r, const Ideal& i, const Ideal& j) {
  return ideal_from_set(r, i.elements.intersect(j.elements));
}

}  // namespace sidem
