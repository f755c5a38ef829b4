#pragma once

#include <vector>

#include "abelian.hpp"
#include "module.hpp"

namespace sidem {

/// A ring or module built on a carrier inside some parent structure, with
/// the element maps in both directions.
template <class Ptr>
struct Presented {
  Ptr value;
  std::vector<Elem> to_parent;  // local element -> parent element
  std::vector<Elem> to_local;   // parent element -> local element (only meaningful on the carrier)
};

namespace detail {

struct CarrierBasis {
  CyclicDecomposition dec;
  std::vector<Elem> to_parent;
  std::vector<Elem> to_local;

  Coords local_coords(const Radix& radix, Elem parent) const { return radix.coords(to_local[parent]); }
};

/// Decomposes a carrier (sorted parent elements, closed under `add`).
template <class Add>
CarrierBasis carrier_basis(std::size_t parent_size, const std::vector<Elem>& carrier, Add add) {
  std::vector<std::size_t> pos(parent_size, 0);
  for (std::size_t p = 0; p < carrier.size(); ++p) pos[carrier[p]] = p;
  std::size_t zero = pos[0];
  auto dec = decompose_abelian(carrier.size(), zero, [&](std::size_t a, std::size_t b) {
    return pos[add(carrier[a], carrier[b])];
  });
  CarrierBasis out{std::move(dec), {}, std::vector<Elem>(parent_size, 0)};
  out.to_parent.resize(out.dec.size());
  for (std::size_t c = 0; c < out.dec.size(); ++c) {
    Elem parent = carrier[out.dec.member_of[c]];
    out.to_parent[c] = parent;
    out.to_local[parent] = static_cast<Elem>(c);
  }
  return out;
}

}  // namespace detail

/// A ring on a carrier of parent-ring elements closed under add and mul with
/// identity `one` (e.g. eR with identity e).
template <class Add, class Mul>
Presented<RingPtr> present_ring(std::size_t parent_size, const std::vector<Elem>& carrier, Add add, Mul mul,
                                Elem one) {
  auto cb = detail::carrier_basis(parent_size, carrier, add);
  detail::Radix radix(cb.dec.orders);
  const std::size_t k = cb.dec.orders.size();
  RingPresentation pres{cb.dec.orders, radix.coords(cb.to_local[one]), {}};
  pres.mul_table.assign(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem bi = cb.to_parent[radix.unit(i)], bj = cb.to_parent[radix.unit(j)];
      pres.mul_table[i][j] = radix.coords(cb.to_local[mul(bi, bj)]);
    }
  return {Ring::create(std::move(pres), Validation::structural), std::move(cb.to_parent), std::move(cb.to_local)};
}

/// A module over `ring` on a carrier of parent-module elements. The i-th
/// generator of `ring` corresponds to the parent ring element
/// ring_gen_parent[i], and act(r_parent, m_parent) gives the action.
template <class Add, class Act>
Presented<ModulePtr> present_module(RingPtr ring, const std::vector<Elem>& ring_gen_parent, std::size_t parent_size,
                                    const std::vector<Elem>& carrier, Add add, Act act) {
  auto cb = detail::carrier_basis(parent_size, carrier, add);
  detail::Radix radix(cb.dec.orders);
  const std::size_t k = cb.dec.orders.size();
  ModulePresentation pres{cb.dec.orders, {}};
  pres.action_table.assign(ring->generator_count(), std::vector<Coords>(k));
  for (std::size_t i = 0; i < ring->generator_count(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem bj = cb.to_parent[radix.unit(j)];
      pres.action_table[i][j] = radix.coords(cb.to_local[act(ring_gen_parent[i], bj)]);
    }
  return {Module::create(std::move(ring), std::move(pres), Validation::structural), std::move(cb.to_parent),
          std::move(cb.to_local)};
}

/// N viewed as an R-module in its own right, with the embedding into M.
inline Presented<ModulePtr> submodule_as_module(const Module& m, const Submodule& n) {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < m.ring().generator_count(); ++i) gens.push_back(m.ring().generator(i));
  return present_module(
      m.ring_ptr(), gens, m.size(), n.elements.elements(), [&m](Elem a, Elem b) { return m.add(a, b); },
      [&m](Elem r, Elem x) { return m.act(r, x); });
}

/// M/N with its projection. Cosets are named by their least member.
struct Quotient {
  ModulePtr module;
  std::vector<Elem> projection;  // element of M -> element of M/N
  std::vector<Elem> lift;        // element of M/N -> least member of its coset
};

inline Quotient quotient_module(const Module& m, const Submodule& n) {
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> rep(m.size(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < m.size(); ++x) {
    if (rep[x] != unset) continue;
    reps.push_back(x);
    for (Elem y : n.elements) rep[m.add(x, y)] = x;
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < m.ring().generator_count(); ++i) gens.push_back(m.ring().generator(i));
  auto presented = present_module(
      m.ring_ptr(), gens, m.size(), reps, [&](Elem a, Elem b) { return rep[m.add(a, b)]; },
      [&](Elem r, Elem x) { return rep[m.act(r, x)]; });
  Quotient q{presented.value, std::vector<Elem>(m.size()), presented.to_parent};
  for (Elem x = 0; x < m.size(); ++x) q.projection[x] = presented.to_local[rep[x]];
  return q;
}

}  // namespace sidem
