#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace sidem {

using Coords = std::vector<std::uint32_t>;

/// Size limits shared by validation and enumeration.
struct Caps {
  std::size_t size_cap = 1U << 16;         // largest ring or module accepted at all
  std::size_t binary_check_cap = 4096;     // exhaustive pair checks up to this size
  std::size_t triple_check_cap = 512;      // exhaustive triple checks up to this size
  std::size_t sampled_triples = 100000;    // random triples above the triple cap
  std::size_t table_cap = 1024;            // full operation tables up to this size
  std::size_t enumeration_cap = 1024;      // ideal / submodule enumeration
  std::size_t hom_cap = 1U << 20;          // |N|^(#generators of M) for Hom enumeration
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

enum class Validation {
  exhaustive,  // generator-level checks plus element-level checks up to the caps
  structural,  // generator-level checks only (sufficient for bilinear structures)
};

/// A finite commutative ring given by additive cyclic generators g_1..g_k of
/// orders d_1..d_k, the coordinates of 1, and the products g_i g_j.
struct RingPresentation {
  std::vector<std::uint32_t> additive_orders;
  Coords one;
  std::vector<std::vector<Coords>> mul_table;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

namespace detail {

/// Mixed-radix numbering of coordinate vectors, first coordinate most significant.
class Radix {
 public:
  Radix() = default;
  explicit Radix(std::vector<std::uint32_t> orders) : orders_(std::move(orders)), strides_(orders_.size()) {
    std::size_t s = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      strides_[i] = s;
      s *= orders_[i];
    }
    size_ = s;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }

  Coords coords(Elem e) const {
    Coords c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      c[i] = static_cast<std::uint32_t>((e / strides_[i]) % orders_[i]);
    }
    return c;
  }

  std::uint32_t coord(Elem e, std::size_t i) const noexcept {
    return static_cast<std::uint32_t>((e / strides_[i]) % orders_[i]);
  }

  Elem index(std::span<const std::uint32_t> c) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) e += (c[i] % orders_[i]) * strides_[i];
    return static_cast<Elem>(e);
  }

  /// Index of the vector sum_t weight_t * vec_t, reduced per coordinate.
  Elem add_coords(Elem a, Elem b) const noexcept {
    std::size_t e = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint32_t c = coord(a, i) + coord(b, i);
      if (c >= orders_[i]) c -= orders_[i];
      e += c * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  Elem neg_coords(Elem a) const noexcept {
    std::size_t e = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint32_t c = coord(a, i);
      e += (c == 0 ? 0 : orders_[i] - c) * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  Elem unit(std::size_t i) const noexcept { return static_cast<Elem>(orders_[i] == 1 ? 0 : strides_[i]); }

  bool valid_coords(std::span<const std::uint32_t> c) const noexcept {
    if (c.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] >= orders_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Bilinear product of coordinate vectors through structure constants
/// table[i][j] (an element of the target, as coordinates).
inline Elem bilinear(const Radix& left, const Radix& right, const Radix& target,
                     const std::vector<std::vector<Coords>>& table, Elem a, Elem b) {
  const std::size_t k = target.rank();
  std::vector<std::uint64_t> acc(k, 0);
  for (std::size_t i = 0; i < left.rank(); ++i) {
    std::uint64_t ai = left.coord(a, i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < right.rank(); ++j) {
      std::uint64_t w = ai * right.coord(b, j);
      if (w == 0) continue;
      const Coords& t = table[i][j];
      for (std::size_t c = 0; c < k; ++c) acc[c] = (acc[c] + w * t[c]) % target.orders()[c];
    }
  }
  Coords c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(acc[i]);
  return target.index(c);
}

struct RingMemo;

}  // namespace detail

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A validated finite commutative ring with identity. Immutable after
/// construction; element operations are safe to call concurrently.
class Ring {
  struct Private {};

 public:
  Ring(Private, RingPresentation pres, const Caps& caps);

  static RingPtr create(RingPresentation pres, Validation validation = Validation::exhaustive,
                        const Caps& caps = default_caps());

  std::size_t size() const noexcept { return radix_.size(); }
  std::size_t generator_count() const noexcept { return radix_.rank(); }
  const RingPresentation& presentation() const noexcept { return pres_; }
  const detail::Radix& radix() const noexcept { return radix_; }

  /// False when associativity/distributivity were only sampled.
  bool fully_validated() const noexcept { return fully_validated_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  Elem generator(std::size_t i) const noexcept { return radix_.unit(i); }

  Coords coords(Elem e) const { return radix_.coords(e); }
  Elem element(std::span<const std::uint32_t> c) const {
    if (!radix_.valid_coords(c)) throw PresentationError("coordinate vector does not fit the ring");
    return radix_.index(c);
  }
  Elem element(std::initializer_list<std::uint32_t> c) const {
    return element(std::span<const std::uint32_t>(c.begin(), c.size()));
  }

  Elem add(Elem a, Elem b) const noexcept {
    return add_table_.empty() ? radix_.add_coords(a, b) : add_table_[a * size() + b];
  }
  Elem neg(Elem a) const noexcept { return radix_.neg_coords(a); }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return mul_table_.empty() ? detail::bilinear(radix_, radix_, radix_, pres_.mul_table, a, b)
                              : mul_table_[a * size() + b];
  }
  /// n-fold sum of a.
  Elem scale(std::uint64_t n, Elem a) const {
    Elem r = 0;
    for (std::uint64_t i = 0; i < n; ++i) r = add(r, a);
    return r;
  }

  /// Canonical text form: "3" for one coordinate, "(1,0)" otherwise.
  std::string format(Elem e) const;

  detail::RingMemo& memo() const { return *memo_; }

  friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.pres_ == b.pres_; }

 private:
  void validate(Validation validation, const Caps& caps);

  RingPresentation pres_;
  detail::Radix radix_;
  Elem one_ = 0;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  bool fully_validated_ = true;
  std::shared_ptr<detail::RingMemo> memo_;
};

inline std::string format_coords(const Coords& c) {
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

inline std::string Ring::format(Elem e) const { return format_coords(coords(e)); }

namespace detail {

/// Lazily computed, read-mostly data attached to a ring.
struct RingMemo {
  std::once_flag units_once;
  ElementSet units;
  std::once_flag ideals_once;
  std::vector<Ideal> ideals;
  std::once_flag maximal_once;
  std::vector<Ideal> maximal;
};

inline void check_presentation_shape(const RingPresentation& p) {
  const std::size_t k = p.additive_orders.size();
  if (k == 0) throw PresentationError("ring needs at least one additive generator");
  for (auto d : p.additive_orders)
    if (d == 0) throw PresentationError("additive orders must be >= 1");
  Radix r(p.additive_orders);
  if (!r.valid_coords(p.one)) throw PresentationError("one: coordinates do not fit the additive orders");
  if (p.mul_table.size() != k) throw PresentationError("mul_table: expected " + std::to_string(k) + " rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (p.mul_table[i].size() != k)
      throw PresentationError("mul_table[" + std::to_string(i) + "]: expected " + std::to_string(k) + " entries");
    for (std::size_t j = 0; j < k; ++j)
      if (!r.valid_coords(p.mul_table[i][j]))
        throw PresentationError("mul_table[" + std::to_string(i) + "][" + std::to_string(j) +
                                "]: coordinates do not fit the additive orders");
  }
}

}  // namespace detail

inline Ring::Ring(Private, RingPresentation pres, const Caps& caps)
    : pres_(std::move(pres)), radix_(pres_.additive_orders), memo_(std::make_shared<detail::RingMemo>()) {
  one_ = radix_.index(pres_.one);
  const std::size_t n = radix_.size();
  if (n <= caps.table_cap) {
    add_table_.resize(n * n);
    mul_table_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        add_table_[a * n + b] = radix_.add_coords(a, b);
        mul_table_[a * n + b] = detail::bilinear(radix_, radix_, radix_, pres_.mul_table, a, b);
      }
  }
}

inline RingPtr Ring::create(RingPresentation pres, Validation validation, const Caps& caps) {
  detail::check_presentation_shape(pres);
  std::size_t n = 1;
  for (auto d : pres.additive_orders) {
    n *= d;
    if (n > caps.size_cap) throw SizeExceeded("ring", n, caps.size_cap);
  }
  auto ring = std::make_shared<Ring>(Private{}, std::move(pres), caps);
  ring->validate(validation, caps);
  return ring;
}

inline void Ring::validate(Validation validation, const Caps& caps) {
  const std::size_t k = generator_count();
  const auto& d = pres_.additive_orders;
  const std::size_t n = size();

  // Generator level. With well-defined bilinear structure constants these
  // checks already imply every axiom.
  for (std::size_t i = 0; i < k; ++i) {
    Elem g = generator(i);
    if (mul(one_, g) != g)
      throw AxiomViolation("identity", {one_, g}, "1*" + format(g) + " = " + format(mul(one_, g)));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (pres_.mul_table[i][j] != pres_.mul_table[j][i])
        throw AxiomViolation("commutativity", {generator(i), generator(j)},
                             "generator products g" + std::to_string(i) + "*g" + std::to_string(j) + " differ");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < k; ++c)
        if ((static_cast<std::uint64_t>(d[i]) * pres_.mul_table[i][j][c]) % d[c] != 0) {
          // (g_i + (d_i - 1) g_i) g_j = 0 but g_i g_j + (d_i - 1) g_i g_j = d_i g_i g_j != 0
          Elem a = generator(i), b = scale(d[i] - 1, a), cc = generator(j);
          throw AxiomViolation("distributivity", {a, b, cc},
                               "order of g" + std::to_string(i) + " does not annihilate g" + std::to_string(i) +
                                   "*g" + std::to_string(j));
        }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Elem a = generator(i), b = generator(j), c = generator(l);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw AxiomViolation("associativity", {a, b, c}, "generator triple");
      }

  if (validation == Validation::structural) return;

  if (n <= caps.binary_check_cap) {
    for (Elem x = 0; x < n; ++x)
      if (mul(one_, x) != x) throw AxiomViolation("identity", {one_, x}, "1*" + format(x));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) throw AxiomViolation("commutativity", {a, b}, format(a) + "*" + format(b));
  }
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw AxiomViolation("associativity", {a, b, c}, "element triple");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      throw AxiomViolation("distributivity", {a, b, c}, "element triple");
  };
  if (n <= caps.triple_check_cap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < caps.sampled_triples; ++t)
      check_triple(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n));
    fully_validated_ = false;
  }
}

/// Element of a specific ring, with arithmetic that refuses to mix rings.
class RingElement {
 public:
  RingElement(RingPtr ring, Elem index) : ring_(std::move(ring)), index_(index) {}

  const RingPtr& ring() const noexcept { return ring_; }
  Elem index() const noexcept { return index_; }
  Coords coords() const { return ring_->coords(index_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring_, a.ring_->add(a.index_, b.index_)};
  }
  friend RingElement operator-(const RingElement& a) { return {a.ring_, a.ring_->neg(a.index_)}; }
  friend RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring_, a.ring_->mul(a.index_, b.index_)};
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.index_ == b.index_;
  }

 private:
  static void same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) throw RingMismatch();
  }

  RingPtr ring_;
  Elem index_;
};

enum class ElemOp { add, neg, mul };

inline RingElement elem_op(ElemOp kind, const RingElement& a, const std::optional<RingElement>& b = std::nullopt) {
  switch (kind) {
    case ElemOp::neg:
      return -a;
    case ElemOp::add:
      if (!b) throw std::invalid_argument("add needs two operands");
      return a + *b;
    case ElemOp::mul:
      if (!b) throw std::invalid_argument("mul needs two operands");
      return a * *b;
  }
  throw std::invalid_argument("unknown element operation");
}

/// Z/n as a ring: one generator of order n with g*g = g.
inline RingPresentation cyclic_ring_presentation(std::uint32_t n) {
  if (n == 0) throw PresentationError("Z/n needs n >= 1");
  std::uint32_t one = n == 1 ? 0 : 1;
  return RingPresentation{{n}, {one}, {{{one}}}};
}

inline RingPtr cyclic_ring(std::uint32_t n) { return Ring::create(cyclic_ring_presentation(n)); }

}  // namespace sidem
