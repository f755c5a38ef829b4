#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sidem::detail {

/// A finite abelian group written as a direct sum of cyclic groups.
///
/// Members of the group are addressed by position 0..n-1 in some carrier list
/// chosen by the caller. `member_of[c]` maps a mixed-radix coordinate index
/// (first basis element most significant) to the member it names, and
/// `index_of` is the inverse.
struct CyclicDecomposition {
  std::vector<std::uint32_t> orders;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> member_of;
  std::vector<std::size_t> index_of;

  std::size_t size() const noexcept { return member_of.size(); }
};

/// Decomposes the group on members {0..n-1} with the given addition.
///
/// Greedy: repeatedly take the element whose order modulo the current span B
/// is largest and whose order in the whole group equals that relative order.
/// B stays a direct summand at every step, so such an element always exists
/// and B + <z> is direct. The resulting orders are the invariant factors.
/// The zero group gets a single basis element of order 1.
template <class Add>
CyclicDecomposition decompose_abelian(std::size_t n, std::size_t zero, Add add) {
  CyclicDecomposition out;
  std::vector<char> in_span(n, 0);
  std::vector<std::size_t> span{zero};
  in_span[zero] = 1;

  auto order_in_group = [&](std::size_t z) {
    std::uint32_t k = 1;
    for (std::size_t w = z; w != zero; w = add(w, z)) ++k;
    return k;
  };

  while (span.size() < n) {
    // The largest relative order first; a lift of that order must be taken
    // from among those cosets, or B stops being a direct summand.
    std::vector<std::uint32_t> rel(n, 0);
    std::uint32_t best_rel = 0;
    for (std::size_t z = 0; z < n; ++z) {
      if (in_span[z]) continue;
      std::uint32_t k = 1;
      for (std::size_t w = z; !in_span[w]; w = add(w, z)) ++k;
      rel[z] = k;
      if (k > best_rel) best_rel = k;
    }
    std::size_t best = n;
    for (std::size_t z = 0; z < n && best == n; ++z)
      if (!in_span[z] && rel[z] == best_rel && order_in_group(z) == best_rel) best = z;
    if (best == n) throw std::logic_error("decompose_abelian: no order-preserving lift found");
    out.basis.push_back(best);
    out.orders.push_back(best_rel);
    const std::vector<std::size_t> base = span;
    std::size_t w = best;
    for (std::uint32_t k = 1; k < best_rel; ++k, w = add(w, best)) {
      for (std::size_t h : base) {
        std::size_t v = add(h, w);
        in_span[v] = 1;
        span.push_back(v);
      }
    }
  }
  if (out.basis.empty()) {
    out.basis.push_back(zero);
    out.orders.push_back(1);
  }

  // Build members in mixed-radix order: process basis from last to first so
  // the first basis element ends up most significant.
  std::vector<std::size_t> members{zero};
  for (std::size_t i = out.basis.size(); i-- > 0;) {
    std::vector<std::size_t> next;
    next.reserve(members.size() * out.orders[i]);
    std::size_t multiple = zero;
    for (std::uint32_t c = 0; c < out.orders[i]; ++c) {
      for (std::size_t m : members) next.push_back(add(multiple, m));
      multiple = add(multiple, out.basis[i]);
    }
    members = std::move(next);
  }
  out.member_of = std::move(members);
  out.index_of.assign(n, 0);
  for (std::size_t c = 0; c < out.member_of.size(); ++c) out.index_of[out.member_of[c]] = c;
  return out;
}

}  // namespace sidem::detail
