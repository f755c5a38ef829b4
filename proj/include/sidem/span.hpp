#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "element_set.hpp"

namespace sidem::detail {

/// Incremental closure of a subset of a finite abelian group under addition
/// and a fixed family of additive endomorphisms (the action of the ring's
/// additive generators). Closing under the generators' action is enough for
/// closure under the whole ring, since every ring element is a Z-combination
/// of them.
///
/// `add(a, b)` returns a + b; `act(i, x)` returns generator i applied to x.
template <class Add, class Act>
class Spanner {
 public:
  Spanner(std::size_t universe, Add add, std::size_t n_actions, Act act)
      : set_(universe), add_(std::move(add)), act_(std::move(act)), n_actions_(n_actions) {
    set_.insert(0);
  }

  /// Starts from an already closed set.
  Spanner(const ElementSet& closed, Add add, std::size_t n_actions, Act act)
      : set_(closed), add_(std::move(add)), act_(std::move(act)), n_actions_(n_actions) {}

  /// Adjoins `y` and restores closure. Returns false if `y` was already spanned.
  bool adjoin(Elem y) {
    if (set_.contains(y)) return false;
    generators_.push_back(y);
    std::deque<Elem> pending{y};
    while (!pending.empty()) {
      Elem x = pending.front();
      pending.pop_front();
      if (set_.contains(x)) continue;
      // The cosets H + kx are new exactly until kx falls back into H.
      const std::vector<Elem> base = set_.elements();
      Elem w = x;
      while (!set_.contains(w)) {
        for (Elem h : base) set_.insert(add_(h, w));
        w = add_(w, x);
      }
      for (std::size_t i = 0; i < n_actions_; ++i) {
        Elem image = act_(i, x);
        if (!set_.contains(image)) pending.push_back(image);
      }
    }
    return true;
  }

  template <class Range>
  void adjoin_all(const Range& ys) {
    for (Elem y : ys) adjoin(y);
  }

  const ElementSet& set() {
    set_.normalize();
    return set_;
  }

  /// The adjoined elements that enlarged the span, in adjunction order.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  template <class Tag>
  GeneratedSet<Tag> finish() {
    set_.normalize();
    return GeneratedSet<Tag>{set_, generators_};
  }

 private:
  ElementSet set_;
  Add add_;
  Act act_;
  std::size_t n_actions_;
  std::vector<Elem> generators_;
};

template <class Add, class Act>
Spanner(std::size_t, Add, std::size_t, Act) -> Spanner<Add, Act>;

}  // namespace sidem::detail
