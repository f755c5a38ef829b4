#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "module.hpp"
#include "mult_set.hpp"

namespace sidem {

struct SubmoduleWitness {
  Submodule submodule;
  Elem s = 0;
  std::optional<Ideal> ideal;
};

struct Witness {
  std::optional<Elem> s;
  std::optional<Elem> a;
  std::optional<Ideal> ideal;
  std::vector<SubmoduleWitness> per_submodule;
};

/// What falsifies a property. `s` is the product of all elements of S: if
/// it fails, every element of S fails, because witnesses stay witnesses
/// under multiplication.
struct Counterexample {
  std::optional<Submodule> submodule;
  std::optional<Ideal> ideal;
  std::optional<Elem> element;
  std::optional<Elem> s;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
  std::optional<Counterexample> counterexample;
  bool degenerate = false;

  explicit operator bool() const noexcept { return holds; }
};

enum class FullyProperty { s_idempotent, s_pure, s_copure };

namespace detail {

/// First s in S (canonical order) satisfying `ok`, or nullopt. `ok` must be
/// stable under multiplication (ok(s) implies ok(ts)); then testing the
/// product of S first rejects hopeless cases in one call.
template <class Pred>
std::optional<Elem> first_witness(const MultSet& s, Elem product, Pred ok) {
  if (!ok(product)) return std::nullopt;
  for (Elem t : s.elements)
    if (ok(t)) return t;
  throw std::logic_error("witness predicate is not stable under multiplication");
}

inline Verdict holds_with(Witness w, const MultSet& s) {
  return Verdict{true, std::move(w), std::nullopt, s.degenerate()};
}

inline Verdict fails_with(Counterexample c, const MultSet& s) {
  return Verdict{false, std::nullopt, std::move(c), s.degenerate()};
}

template <class PairList>
std::optional<Elem> uniform_witness(const Module& m, const MultSet& s, Elem product, const PairList& pairs) {
  return first_witness(s, product, [&](Elem t) {
    for (const auto& [lhs, rhs] : pairs)
      if (!scaled_within(m, t, lhs, rhs)) return false;
    return true;
  });
}

inline void ensure_pure_pairs(const Module& m) {
  const auto& subs = enumerate_submodules(m);
  const auto& ideals = enumerate_ideals(m.ring());
  auto& memo = m.memo();
  std::call_once(memo.pure_once, [&] {
    const Submodule whole = whole_module(m);
    std::vector<Submodule> im;
    for (const auto& i : ideals) im.push_back(ideal_times_submodule(m, i, whole));
    for (const auto& n : subs) {
      std::vector<std::pair<Submodule, Submodule>> row;
      for (std::size_t j = 0; j < ideals.size(); ++j)
        row.emplace_back(sub_intersect(m, n, im[j]), ideal_times_submodule(m, ideals[j], n));
      memo.pure.push_back(std::move(row));
    }
  });
}

inline void ensure_copure_pairs(const Module& m) {
  const auto& subs = enumerate_submodules(m);
  const auto& ideals = enumerate_ideals(m.ring());
  auto& memo = m.memo();
  std::call_once(memo.copure_once, [&] {
    const Submodule zero = zero_submodule(m);
    std::vector<Submodule> ann;
    for (const auto& i : ideals) ann.push_back(colon_in_module(m, zero, i));
    for (const auto& n : subs) {
      std::vector<std::pair<Submodule, Submodule>> row;
      for (std::size_t j = 0; j < ideals.size(); ++j)
        row.emplace_back(colon_in_module(m, n, ideals[j]), sub_sum(m, n, ann[j]));
      memo.copure.push_back(std::move(row));
    }
  });
}

inline std::optional<std::size_t> cached_index(const Module& m, const Submodule& n) {
  if (m.size() > default_caps().enumeration_cap) return std::nullopt;
  enumerate_submodules(m);
  auto it = m.memo().index.find(n.elements);
  if (it == m.memo().index.end()) return std::nullopt;
  return it->second;
}

/// Shared shape of the S-pure and S-copure checks: exists s, for all ideals I,
/// s * lhs(I) lies in rhs(I).
inline Verdict uniform_over_ideals(const Module& m, const MultSet& s, Elem p, const Submodule& n,
                                   const std::vector<std::pair<Submodule, Submodule>>& pairs) {
  if (auto w = uniform_witness(m, s, p, pairs)) {
    Witness wit;
    wit.s = *w;
    return holds_with(std::move(wit), s);
  }
  const auto& ideals = enumerate_ideals(m.ring());
  for (std::size_t j = 0; j < pairs.size(); ++j)
    if (!scaled_within(m, p, pairs[j].first, pairs[j].second))
      return fails_with(Counterexample{n, ideals[j], std::nullopt, p}, s);
  throw std::logic_error("uniform_over_ideals: no failing ideal");
}

}  // namespace detail

/// First s in S (canonical order) with ok(s), for predicates stable under
/// multiplication by elements of R.
template <class Pred>
std::optional<Elem> find_witness(const MultSet& s, Pred ok) {
  return detail::first_witness(s, product_of_elements(s), ok);
}

/// x is S-idempotent: sx = ax for some s in S and a in (Rx :_R M).
inline Verdict is_s_idempotent_element(const Module& m, const MultSet& s, Elem x) {
  const Submodule rx = submodule_generated(m, {x});
  const Ideal c = colon_into(m, rx);
  for (Elem t : s.elements) {
    const Elem tx = m.act(t, x);
    for (Elem a : c.elements)
      if (m.act(a, x) == tx) {
        Witness w;
        w.s = t;
        w.a = a;
        return detail::holds_with(std::move(w), s);
      }
  }
  return detail::fails_with(Counterexample{rx, std::nullopt, x, product_of_elements(s)}, s);
}

/// N is S-idempotent: sN lies in (N :_R M)^2 M for some s in S.
/// `p` must be product_of_elements(s); callers looping over submodules pass it in.
inline Verdict is_s_idempotent_submodule(const Module& m, const MultSet& s, Elem p, const Submodule& n) {
  const Submodule target = colon_square_times(m, n);
  if (!target.is_subset_of(n)) throw std::logic_error("(N:M)^2 M is not contained in N");
  if (auto w = detail::first_witness(s, p, [&](Elem t) { return scaled_within(m, t, n, target); })) {
    Witness wit;
    wit.s = *w;
    return detail::holds_with(std::move(wit), s);
  }
  return detail::fails_with(Counterexample{n, std::nullopt, std::nullopt, p}, s);
}

inline Verdict is_s_idempotent_submodule(const Module& m, const MultSet& s, const Submodule& n) {
  return is_s_idempotent_submodule(m, s, product_of_elements(s), n);
}

/// Every submodule of M is S-idempotent.
inline Verdict is_fully_s_idempotent(const Module& m, const MultSet& s) {
  const Elem p = product_of_elements(s);
  Witness all;
  for (const auto& n : enumerate_submodules(m)) {
    Verdict v = is_s_idempotent_submodule(m, s, p, n);
    if (!v.holds) return v;
    all.per_submodule.push_back({n, *v.witness->s, std::nullopt});
  }
  return detail::holds_with(std::move(all), s);
}

/// Fast path: N satisfies sN within IM within N for some I iff it does for I = (N :_R M).
inline Verdict is_s_multiplication(const Module& m, const MultSet& s) {
  const Elem p = product_of_elements(s);
  Witness all;
  for (const auto& n : enumerate_submodules(m)) {
    const Submodule target = colon_times(m, n);
    auto w = detail::first_witness(s, p, [&](Elem t) { return scaled_within(m, t, n, target); });
    if (!w) return detail::fails_with(Counterexample{n, colon_into(m, n), std::nullopt, p}, s);
    all.per_submodule.push_back({n, *w, colon_into(m, n)});
  }
  return detail::holds_with(std::move(all), s);
}

/// S-multiplication straight from the definition, searching every ideal I
/// for each submodule. Used as an oracle for the fast path.
inline Verdict is_s_multiplication_by_definition(const Module& m, const MultSet& s) {
  const auto& ideals = enumerate_ideals(m.ring());
  const Submodule whole = whole_module(m);
  std::vector<Submodule> im;
  for (const auto& i : ideals) im.push_back(ideal_times_submodule(m, i, whole));
  Witness all;
  for (const auto& n : enumerate_submodules(m)) {
    std::optional<SubmoduleWitness> found;
    for (Elem t : s.elements) {
      for (std::size_t j = 0; j < ideals.size() && !found; ++j)
        if (im[j].is_subset_of(n) && scaled_within(m, t, n, im[j])) found = SubmoduleWitness{n, t, ideals[j]};
      if (found) break;
    }
    if (!found) return detail::fails_with(Counterexample{n, std::nullopt, std::nullopt, product_of_elements(s)}, s);
    all.per_submodule.push_back(*found);
  }
  return detail::holds_with(std::move(all), s);
}

/// N is S-pure: one s in S with s(N cap IM) within IN for every ideal I.
inline Verdict is_s_pure_submodule(const Module& m, const MultSet& s, Elem p, const Submodule& n) {
  if (auto idx = detail::cached_index(m, n)) {
    detail::ensure_pure_pairs(m);
    return detail::uniform_over_ideals(m, s, p, n, m.memo().pure[*idx]);
  }
  const Submodule whole = whole_module(m);
  std::vector<std::pair<Submodule, Submodule>> pairs;
  for (const auto& i : enumerate_ideals(m.ring()))
    pairs.emplace_back(sub_intersect(m, n, ideal_times_submodule(m, i, whole)), ideal_times_submodule(m, i, n));
  return detail::uniform_over_ideals(m, s, p, n, pairs);
}

inline Verdict is_s_pure_submodule(const Module& m, const MultSet& s, const Submodule& n) {
  return is_s_pure_submodule(m, s, product_of_elements(s), n);
}

/// N is S-copure: one s in S with s(N :_M I) within N + (0 :_M I) for every ideal I.
inline Verdict is_s_copure_submodule(const Module& m, const MultSet& s, Elem p, const Submodule& n) {
  if (auto idx = detail::cached_index(m, n)) {
    detail::ensure_copure_pairs(m);
    return detail::uniform_over_ideals(m, s, p, n, m.memo().copure[*idx]);
  }
  const Submodule zero = zero_submodule(m);
  std::vector<std::pair<Submodule, Submodule>> pairs;
  for (const auto& i : enumerate_ideals(m.ring()))
    pairs.emplace_back(colon_in_module(m, n, i), sub_sum(m, n, colon_in_module(m, zero, i)));
  return detail::uniform_over_ideals(m, s, p, n, pairs);
}

inline Verdict is_s_copure_submodule(const Module& m, const MultSet& s, const Submodule& n) {
  return is_s_copure_submodule(m, s, product_of_elements(s), n);
}

/// Conjunction of a per-submodule property over all submodules of M.
inline Verdict is_fully(FullyProperty property, const Module& m, const MultSet& s) {
  if (property == FullyProperty::s_idempotent) return is_fully_s_idempotent(m, s);
  const Elem p = product_of_elements(s);
  Witness all;
  for (const auto& n : enumerate_submodules(m)) {
    Verdict v =
        property == FullyProperty::s_pure ? is_s_pure_submodule(m, s, p, n) : is_s_copure_submodule(m, s, p, n);
    if (!v.holds) return v;
    all.per_submodule.push_back({n, *v.witness->s, std::nullopt});
  }
  return detail::holds_with(std::move(all), s);
}

// Plain properties are the S = {1} case.

inline Verdict is_idempotent_submodule(const Module& m, const Submodule& n) {
  return is_s_idempotent_submodule(m, trivial_mult_set(m.ring_ptr()), n);
}
inline Verdict is_fully_idempotent(const Module& m) { return is_fully_s_idempotent(m, trivial_mult_set(m.ring_ptr())); }
inline Verdict is_multiplication(const Module& m) { return is_s_multiplication(m, trivial_mult_set(m.ring_ptr())); }
inline Verdict is_pure_submodule(const Module& m, const Submodule& n) {
  return is_s_pure_submodule(m, trivial_mult_set(m.ring_ptr()), n);
}
inline Verdict is_copure_submodule(const Module& m, const Submodule& n) {
  return is_s_copure_submodule(m, trivial_mult_set(m.ring_ptr()), n);
}

}  // namespace sidem
