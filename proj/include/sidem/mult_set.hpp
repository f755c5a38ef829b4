#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "ideal.hpp"

namespace sidem {

/// A multiplicatively closed subset of a ring. Always contains 1; sets that
/// contain 0 are legal but degenerate, since s = 0 then witnesses every
/// S-property.
struct MultSet {
  RingPtr ring;
  ElementSet elements;
  std::vector<Elem> generators;

  bool contains(Elem e) const noexcept { return elements.contains(e); }
  std::size_t size() const noexcept { return elements.size(); }
  bool degenerate() const noexcept { return elements.contains(0); }

  friend bool operator==(const MultSet& a, const MultSet& b) noexcept { return a.elements == b.elements; }
};

/// Smallest multiplicatively closed set containing `gens` and 1.
inline MultSet closure(const RingPtr& ring, std::span<const Elem> gens) {
  const Ring& r = *ring;
  ElementSet s(r.size());
  std::deque<Elem> pending{r.one()};
  s.insert(r.one());
  while (!pending.empty()) {
    Elem x = pending.front();
    pending.pop_front();
    for (Elem g : gens) {
      Elem y = r.mul(x, g);
      if (s.insert(y)) pending.push_back(y);
    }
  }
  s.normalize();
  return MultSet{ring, std::move(s), std::vector<Elem>(gens.begin(), gens.end())};
}

inline MultSet closure(const RingPtr& ring, std::initializer_list<Elem> gens) {
  return closure(ring, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Wraps a set that must already be multiplicatively closed and contain 1.
inline MultSet mult_set_from_elements(const RingPtr& ring, const ElementSet& elems) {
  const Ring& r = *ring;
  if (!elems.contains(r.one())) throw std::invalid_argument("multiplicative set must contain 1");
  for (Elem a : elems)
    for (Elem b : elems)
      if (!elems.contains(r.mul(a, b)))
        throw std::invalid_argument("set is not multiplicatively closed: " + r.format(a) + "*" + r.format(b));
  return MultSet{ring, elems, elems.elements()};
}

/// Product of all elements of S; every t in S divides it.
inline Elem product_of_elements(const MultSet& s) {
  Elem p = s.ring->one();
  for (Elem t : s.elements) p = s.ring->mul(p, t);
  return p;
}

/// Some s in S with t | s for every t in S. The product of all elements is
/// tried first, then S in canonical order.
inline std::optional<Elem> has_maximal_multiple(const MultSet& s) {
  const Ring& r = *s.ring;
  auto works = [&](Elem cand) {
    for (Elem t : s.elements)
      if (!divides(r, t, cand)) return false;
    return true;
  };
  Elem p = product_of_elements(s);
  if (works(p)) return p;
  for (Elem cand : s.elements)
    if (works(cand)) return cand;
  return std::nullopt;
}

/// R \ m for a maximal ideal m. Primality is verified element-wise (in a
/// finite ring, prime and maximal coincide).
inline MultSet complement_of_maximal(const RingPtr& ring, const Ideal& m) {
  const Ring& r = *ring;
  if (auto w = primality_witness(r, m))
    throw NotPrime({w->first, w->second}, r.format(w->first) + "*" + r.format(w->second) + " lies in the ideal");
  if (m.contains(r.one())) throw NotPrime({}, "the ideal is the whole ring");
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (!m.contains(x)) out.insert(x);
  out.normalize();
  return mult_set_from_elements(ring, out);
}

/// S is contained in U(R).
inline bool is_subset_units(const MultSet& s) { return s.elements.is_subset_of(units(*s.ring)); }

/// The trivial multiplicative set {1}.
inline MultSet trivial_mult_set(const RingPtr& ring) { return closure(ring, {}); }

inline MultSet units_mult_set(const RingPtr& ring) {
  return mult_set_from_elements(ring, units(*ring));
}

}  // namespace sidem
