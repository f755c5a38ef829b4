#pragma once

#include <vector>

#include "mult_set.hpp"
#include "present.hpp"

namespace sidem {

/// Index arithmetic for a product of finite sets, first factor most
/// significant (matches concatenated coordinates).
class ProductIndex {
 public:
  ProductIndex() = default;
  explicit ProductIndex(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)), strides_(sizes_.size()) {
    std::size_t s = 1;
    for (std::size_t i = sizes_.size(); i-- > 0;) {
      strides_[i] = s;
      s *= sizes_[i];
    }
    total_ = s;
  }

  std::size_t size() const noexcept { return total_; }
  std::size_t arity() const noexcept { return sizes_.size(); }

  Elem join(std::span<const Elem> parts) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) e += parts[i] * strides_[i];
    return static_cast<Elem>(e);
  }
  Elem component(Elem e, std::size_t i) const { return static_cast<Elem>((e / strides_[i]) % sizes_[i]); }
  std::vector<Elem> split(Elem e) const {
    std::vector<Elem> out(sizes_.size());
    for (std::size_t i = 0; i < sizes_.size(); ++i) out[i] = component(e, i);
    return out;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// R_1 x ... x R_n with componentwise operations. A single factor is returned as is.
inline RingPtr product_ring(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw ArityMismatch("product of zero rings");
  if (factors.size() == 1) return factors.front();
  RingPresentation pres;
  std::vector<std::size_t> offset;
  for (const auto& f : factors) {
    offset.push_back(pres.additive_orders.size());
    const auto& p = f->presentation();
    pres.additive_orders.insert(pres.additive_orders.end(), p.additive_orders.begin(), p.additive_orders.end());
    pres.one.insert(pres.one.end(), p.one.begin(), p.one.end());
  }
  const std::size_t k = pres.additive_orders.size();
  pres.mul_table.assign(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& p = factors[f]->presentation();
    const std::size_t kf = p.additive_orders.size();
    for (std::size_t i = 0; i < kf; ++i)
      for (std::size_t j = 0; j < kf; ++j)
        for (std::size_t c = 0; c < kf; ++c) pres.mul_table[offset[f] + i][offset[f] + j][offset[f] + c] = p.mul_table[i][j][c];
  }
  return Ring::create(std::move(pres), Validation::structural);
}

inline ProductIndex product_index(const std::vector<RingPtr>& factors) {
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f->size());
  return ProductIndex(std::move(sizes));
}

/// M_1 x ... x M_n over R_1 x ... x R_n. `product` must be product_ring of
/// the factors' rings.
inline ModulePtr product_module(const RingPtr& product, const std::vector<ModulePtr>& factors) {
  if (factors.empty()) throw ArityMismatch("product of zero modules");
  std::size_t ring_gens = 0;
  for (const auto& f : factors) ring_gens += f->ring().generator_count();
  if (ring_gens != product->generator_count())
    throw ArityMismatch("module factors do not match the factors of the product ring");
  if (factors.size() == 1) {
    if (!(factors.front()->ring() == *product)) throw ArityMismatch("module is over a different ring");
    return factors.front();
  }
  ModulePresentation pres;
  std::vector<std::size_t> roff, moff;
  std::size_t rk = 0;
  for (const auto& f : factors) {
    roff.push_back(rk);
    moff.push_back(pres.additive_orders.size());
    rk += f->ring().generator_count();
    const auto& p = f->presentation();
    pres.additive_orders.insert(pres.additive_orders.end(), p.additive_orders.begin(), p.additive_orders.end());
  }
  const std::size_t k = pres.additive_orders.size();
  pres.action_table.assign(rk, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& p = factors[f]->presentation();
    for (std::size_t i = 0; i < p.action_table.size(); ++i)
      for (std::size_t j = 0; j < p.additive_orders.size(); ++j)
        for (std::size_t c = 0; c < p.additive_orders.size(); ++c)
          pres.action_table[roff[f] + i][moff[f] + j][moff[f] + c] = p.action_table[i][j][c];
  }
  return Module::create(product, std::move(pres), Validation::structural);
}

inline ModulePtr product_module(const std::vector<ModulePtr>& factors) {
  std::vector<RingPtr> rings;
  for (const auto& f : factors) rings.push_back(f->ring_ptr());
  return product_module(product_ring(rings), factors);
}

/// M_1 + ... + M_n over a single ring, coordinates concatenated.
inline ModulePtr direct_sum(const RingPtr& ring, const std::vector<ModulePtr>& summands) {
  if (summands.empty()) throw ArityMismatch("direct sum of zero modules");
  ModulePresentation pres;
  std::vector<std::size_t> off;
  for (const auto& f : summands) {
    if (!(f->ring() == *ring)) throw RingMismatch();
    off.push_back(pres.additive_orders.size());
    const auto& p = f->presentation();
    pres.additive_orders.insert(pres.additive_orders.end(), p.additive_orders.begin(), p.additive_orders.end());
  }
  const std::size_t k = pres.additive_orders.size();
  pres.action_table.assign(ring->generator_count(), std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t f = 0; f < summands.size(); ++f) {
    const auto& p = summands[f]->presentation();
    for (std::size_t i = 0; i < p.action_table.size(); ++i)
      for (std::size_t j = 0; j < p.additive_orders.size(); ++j)
        for (std::size_t c = 0; c < p.additive_orders.size(); ++c)
          pres.action_table[i][off[f] + j][off[f] + c] = p.action_table[i][j][c];
  }
  return Module::create(ring, std::move(pres), Validation::structural);
}

/// S_1 x ... x S_n inside the product ring, as the closure of the factor sets.
inline MultSet product_mult_set(const RingPtr& product, const std::vector<MultSet>& factors) {
  if (factors.empty()) throw ArityMismatch("product of zero multiplicative sets");
  std::vector<RingPtr> rings;
  for (const auto& f : factors) rings.push_back(f.ring);
  ProductIndex idx = product_index(rings);
  if (idx.size() != product->size()) throw ArityMismatch("multiplicative sets do not match the product ring");
  std::vector<Elem> ones;
  for (const auto& f : factors) ones.push_back(f.ring->one());
  std::vector<Elem> gens;
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (Elem s : factors[f].elements) {
      std::vector<Elem> parts = ones;
      parts[f] = s;
      gens.push_back(idx.join(parts));
    }
  return closure(product, gens);
}

/// Which coordinates of R x M belong to R and which to M.
struct IdealizationTag {
  RingPtr base_ring;
  ModulePtr base_module;
  std::size_t ring_coords = 0;

  Elem pair(Elem a, Elem m) const { return static_cast<Elem>(a * base_module->size() + m); }
  Elem ring_part(Elem x) const { return static_cast<Elem>(x / base_module->size()); }
  Elem module_part(Elem x) const { return static_cast<Elem>(x % base_module->size()); }
  std::string format(Elem x) const {
    return "(" + base_ring->format(ring_part(x)) + "," + base_module->format(module_part(x)) + ")";
  }
};

struct Idealization {
  RingPtr ring;
  IdealizationTag tag;
};

/// The trivial extension R x M with (a,m)(b,n) = (ab, an + bm), identity (1,0).
inline Idealization idealization(const RingPtr& r, const ModulePtr& m) {
  const auto& rp = r->presentation();
  const auto& mp = m->presentation();
  const std::size_t rk = rp.additive_orders.size(), mk = mp.additive_orders.size(), k = rk + mk;
  RingPresentation pres;
  pres.additive_orders = rp.additive_orders;
  pres.additive_orders.insert(pres.additive_orders.end(), mp.additive_orders.begin(), mp.additive_orders.end());
  pres.one = rp.one;
  pres.one.resize(k, 0);
  pres.mul_table.assign(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t j = 0; j < rk; ++j)
      for (std::size_t c = 0; c < rk; ++c) pres.mul_table[i][j][c] = rp.mul_table[i][j][c];
    for (std::size_t j = 0; j < mk; ++j)
      for (std::size_t c = 0; c < mk; ++c) {
        pres.mul_table[i][rk + j][rk + c] = mp.action_table[i][j][c];
        pres.mul_table[rk + j][i][rk + c] = mp.action_table[i][j][c];
      }
  }
  return {Ring::create(std::move(pres), Validation::structural), IdealizationTag{r, m, rk}};
}

/// I x N as an ideal of R x M; requires IM to lie in N.
inline Ideal homogeneous_ideal(const Ideal& i, const Submodule& n, const IdealizationTag& tag) {
  const Module& m = *tag.base_module;
  for (Elem a : i.elements)
    for (Elem x = 0; x < m.size(); ++x)
      if (!n.contains(m.act(a, x)))
        throw NotHomogeneous(a, x, tag.base_ring->format(a) + "*" + m.format(x) + " lies outside N");
  const std::size_t total = tag.base_ring->size() * m.size();
  ElementSet out(total);
  for (Elem a : i.elements)
    for (Elem x : n.elements) out.insert(tag.pair(a, x));
  out.normalize();
  // The tag does not own the idealized ring, so generators are listed in full.
  return Ideal{out, out.elements()};
}

/// S x N = {(s, n)} as a multiplicative set of R x M. Closed because
/// (s,n)(t,n') = (st, sn' + tn) and N is a submodule.
inline MultSet idealized_mult_set(const MultSet& s, const Submodule& n, const Idealization& ext) {
  const auto& tag = ext.tag;
  ElementSet out(ext.ring->size());
  for (Elem a : s.elements)
    for (Elem x : n.elements) out.insert(tag.pair(a, x));
  out.normalize();
  std::vector<Elem> gens = out.elements();
  return MultSet{ext.ring, std::move(out), std::move(gens)};
}

/// An ideal I of R as an R-module, with the embedding into R.
inline Presented<ModulePtr> ideal_as_module(const RingPtr& r, const Ideal& i) {
  std::vector<Elem> gens;
  for (std::size_t g = 0; g < r->generator_count(); ++g) gens.push_back(r->generator(g));
  const Ring& ring = *r;
  return present_module(
      r, gens, ring.size(), i.elements.elements(), [&ring](Elem a, Elem b) { return ring.add(a, b); },
      [&ring](Elem a, Elem x) { return ring.mul(a, x); });
}

/// The epimorphism M -> M/N. Every epimorphic image of a finite module is
/// of this form up to isomorphism.
inline Quotient epi_image(const Module& m, const Submodule& n) { return quotient_module(m, n); }

/// ker f for a map given elementwise.
inline Submodule kernel_of(const Module& m, const std::vector<Elem>& map) {
  ElementSet k(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    if (map[x] == 0) k.insert(x);
  k.normalize();
  return submodule_from_set(m, k);
}

}  // namespace sidem
