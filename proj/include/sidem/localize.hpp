#pragma once

#include <unordered_map>
#include <vector>

#include "mult_set.hpp"
#include "present.hpp"

namespace sidem {

/// S^-1 R (and S^-1 M) for a finite ring, realised as eR (and eM) where e is
/// the idempotent power of the product of all elements of S.
struct LocalizationResult {
  Elem idempotent = 0;
  RingPtr local_ring;
  std::vector<Elem> ring_map;    // r -> er, as an element of local_ring
  std::vector<Elem> ring_embed;  // element of local_ring -> the same element inside R
  ModulePtr local_module;        // null unless a module was supplied
  std::vector<Elem> module_map;
  std::vector<Elem> module_embed;
};

/// The unique idempotent in the cycle of powers of x.
inline Elem idempotent_power(const Ring& r, Elem x) {
  std::unordered_map<Elem, std::size_t> seen;
  std::vector<Elem> powers;
  Elem p = x;
  while (!seen.contains(p)) {
    seen.emplace(p, powers.size() + 1);
    powers.push_back(p);
    p = r.mul(p, x);
  }
  const std::size_t start = seen.at(p);               // first exponent on the cycle
  const std::size_t length = powers.size() + 1 - start;
  const std::size_t m = (start + length - 1) / length * length;
  const std::size_t on_cycle = start + (m - start) % length;
  return powers[on_cycle - 1];
}

/// The S-torsion ideal {r : sr = 0 for some s in S}.
inline ElementSet s_torsion(const MultSet& s) {
  const Ring& r = *s.ring;
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem t : s.elements)
      if (r.mul(t, x) == 0) {
        out.insert(x);
        break;
      }
  out.normalize();
  return out;
}

/// eR (and eM) for an idempotent e of R. Every localization of a finite ring
/// has this form, so results can be shared by all S with the same e.
inline LocalizationResult localize_at(const Ring& r, Elem e, const Module* m = nullptr) {
  LocalizationResult loc;
  loc.idempotent = e;

  ElementSet carrier(r.size());
  for (Elem x = 0; x < r.size(); ++x) carrier.insert(r.mul(e, x));
  carrier.normalize();
  auto ring = present_ring(
      r.size(), carrier.elements(), [&r](Elem a, Elem b) { return r.add(a, b); },
      [&r](Elem a, Elem b) { return r.mul(a, b); }, e);
  loc.local_ring = ring.value;
  loc.ring_embed = ring.to_parent;
  loc.ring_map.resize(r.size());
  for (Elem x = 0; x < r.size(); ++x) loc.ring_map[x] = ring.to_local[r.mul(e, x)];

  if (m != nullptr) {
    ElementSet mc(m->size());
    for (Elem x = 0; x < m->size(); ++x) mc.insert(m->act(e, x));
    mc.normalize();
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < loc.local_ring->generator_count(); ++i)
      gens.push_back(loc.ring_embed[loc.local_ring->generator(i)]);
    auto mod = present_module(
        loc.local_ring, gens, m->size(), mc.elements(), [m](Elem a, Elem b) { return m->add(a, b); },
        [m](Elem a, Elem x) { return m->act(a, x); });
    loc.local_module = mod.value;
    loc.module_embed = mod.to_parent;
    loc.module_map.resize(m->size());
    for (Elem x = 0; x < m->size(); ++x) loc.module_map[x] = mod.to_local[m->act(e, x)];
  }
  return loc;
}

inline LocalizationResult localize(const MultSet& s, const Module* m = nullptr) {
  return localize_at(*s.ring, idempotent_power(*s.ring, product_of_elements(s)), m);
}

/// The image {s/1 : s in S} as a multiplicative set of the local ring.
inline MultSet localized_mult_set(const MultSet& s, const LocalizationResult& loc) {
  ElementSet img(loc.local_ring->size());
  for (Elem t : s.elements) img.insert(loc.ring_map[t]);
  img.normalize();
  MultSet out = closure(loc.local_ring, img.elements());
  return out;
}

/// S* = {x : x/1 is a unit of S^-1 R}.
inline MultSet saturation(const MultSet& s, const LocalizationResult& loc) {
  const Ring& r = *s.ring;
  const ElementSet& local_units = units(*loc.local_ring);
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (local_units.contains(loc.ring_map[x])) out.insert(x);
  out.normalize();
  return MultSet{s.ring, out, out.elements()};
}

inline MultSet saturation(const MultSet& s) { return saturation(s, localize(s)); }

}  // namespace sidem
