#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sidem {

/// Index of an element of a finite ring or module. Elements are numbered in
/// lexicographic order of their coordinate vectors; 0 is always the zero element.
using Elem = std::uint32_t;

/// A subset of a finite universe {0, ..., n-1}, kept both as a bitmap (for
/// membership) and as a sorted list (for canonical iteration and output).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

  ElementSet(std::size_t universe, std::span<const Elem> members) : ElementSet(universe) {
    for (Elem e : members) insert(e);
    normalize();
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.elems_.resize(universe);
    for (std::size_t i = 0; i < universe; ++i) s.elems_[i] = static_cast<Elem>(i);
    for (std::size_t i = 0; i < universe; ++i) s.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  bool contains(Elem e) const noexcept {
    return e < universe_ && ((bits_[e >> 6] >> (e & 63)) & 1U) != 0;
  }

  /// Adds `e`; the sorted list is restored lazily by normalize().
  bool insert(Elem e) {
    if (contains(e)) return false;
    bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
    elems_.push_back(e);
    sorted_ = sorted_ && (elems_.size() < 2 || elems_[elems_.size() - 2] < e);
    return true;
  }

  void normalize() {
    if (!sorted_) {
      std::sort(elems_.begin(), elems_.end());
      sorted_ = true;
    }
  }

  const std::vector<Elem>& elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool is_subset_of(const ElementSet& other) const noexcept {
    if (size() > other.size()) return false;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t theirs = w < other.bits_.size() ? other.bits_[w] : 0;
      if ((bits_[w] & ~theirs) != 0) return false;
    }
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(universe_);
    for (Elem e : elems_)
      if (other.contains(e)) out.insert(e);
    out.normalize();
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (std::uint64_t w : bits_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

  /// Canonical total order: by size, then lexicographically by sorted members.
  friend bool operator<(const ElementSet& a, const ElementSet& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elems_ < b.elems_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> elems_;
  bool sorted_ = true;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A set closed under some algebraic operations, together with a generating
/// list. Equality ignores generators. Tagged so that ideals and submodules
/// cannot be confused at compile time.
template <class Tag>
struct GeneratedSet {
  ElementSet elements;
  std::vector<Elem> generators;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem e) const noexcept { return elements.contains(e); }
  bool is_subset_of(const GeneratedSet& o) const noexcept { return elements.is_subset_of(o.elements); }

  friend bool operator==(const GeneratedSet& a, const GeneratedSet& b) noexcept {
    return a.elements == b.elements;
  }
};

struct IdealTag;
struct SubmoduleTag;

using Ideal = GeneratedSet<IdealTag>;
using Submodule = GeneratedSet<SubmoduleTag>;

}  // namespace sidem
