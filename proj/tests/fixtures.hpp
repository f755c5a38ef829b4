#pragma once

#include <string>
#include <vector>

#include <sidem/sidem.hpp>

namespace fixtures {

using namespace sidem;

struct Fixture {
  std::string name;
  ModulePtr module;
};

inline RingPtr zn(std::uint32_t n) { return cyclic_ring(n); }

inline ModulePtr regular(std::uint32_t n) { return regular_module(zn(n)); }

/// Z_d over Z_n.
inline ModulePtr zd(std::uint32_t n, std::uint32_t d) { return cyclic_module(zn(n), d); }

/// Z_a + Z_b over Z_n.
inline ModulePtr sum_over(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  RingPtr r = zn(n);
  return direct_sum(r, {cyclic_module(r, a), cyclic_module(r, b)});
}

inline ModulePtr ring_product_regular(std::vector<std::uint32_t> ns) {
  std::vector<RingPtr> rs;
  for (auto n : ns) rs.push_back(zn(n));
  return regular_module(product_ring(rs));
}

inline ModulePtr trivial_extension_regular(std::uint32_t n, std::uint32_t d) {
  return regular_module(idealization(zn(n), zd(n, d)).ring);
}

/// Modules small enough for every brute-force oracle (|M| <= 16).
inline std::vector<Fixture> small_modules() {
  std::vector<Fixture> out;
  for (std::uint32_t n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), regular(n)});
  for (auto [n, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{4, 2}, {6, 2}, {6, 3}, {8, 4}, {12, 4}, {12, 6}, {12, 3}})
    out.push_back({"Z" + std::to_string(d) + " over Z" + std::to_string(n), zd(n, d)});
  out.push_back({"zero over Z6", zd(6, 1)});
  out.push_back({"Z2+Z2 over Z2", sum_over(2, 2, 2)});
  out.push_back({"Z3+Z3 over Z3", sum_over(3, 3, 3)});
  out.push_back({"Z2+Z4 over Z4", sum_over(4, 2, 4)});
  out.push_back({"Z4+Z4 over Z4", sum_over(4, 4, 4)});
  out.push_back({"Z2+Z2 over Z4", sum_over(4, 2, 2)});
  out.push_back({"Z2+Z3 over Z6", sum_over(6, 2, 3)});
  out.push_back({"Z2xZ2", ring_product_regular({2, 2})});
  out.push_back({"Z2xZ4", ring_product_regular({2, 4})});
  out.push_back({"Z2xZ2xZ2", ring_product_regular({2, 2, 2})});
  out.push_back({"Z3xZ4", ring_product_regular({3, 4})});
  out.push_back({"Z2*Z2", trivial_extension_regular(2, 2)});
  out.push_back({"Z4*Z2", trivial_extension_regular(4, 2)});
  out.push_back({"Z4*Z4", trivial_extension_regular(4, 4)});
  return out;
}

/// Larger modules up to |M| = 64 for the cheaper oracles.
inline std::vector<Fixture> medium_modules() {
  std::vector<Fixture> out;
  for (std::uint32_t n : {16u, 24u, 30u, 32u, 36u, 48u, 60u, 64u}) out.push_back({"Z" + std::to_string(n), regular(n)});
  out.push_back({"Z2+Z2+Z2 over Z2", direct_sum(zn(2), {zd(2, 2), zd(2, 2), zd(2, 2)})});
  out.push_back({"Z2+Z8 over Z8", sum_over(8, 2, 8)});
  out.push_back({"Z4+Z8 over Z8", sum_over(8, 4, 8)});
  out.push_back({"Z8+Z8 over Z8", sum_over(8, 8, 8)});
  out.push_back({"Z6+Z6 over Z6", sum_over(6, 6, 6)});
  out.push_back({"Z4xZ8", ring_product_regular({4, 8})});
  out.push_back({"Z2xZ4xZ4", ring_product_regular({2, 4, 4})});
  out.push_back({"Z8*Z8", trivial_extension_regular(8, 8)});
  out.push_back({"Z8*Z4", trivial_extension_regular(8, 4)});
  out.push_back({"Z6*Z6", trivial_extension_regular(6, 6)});
  return out;
}

/// Every multiplicative set of the standard families over a ring.
inline std::vector<MultSet> mult_sets(const RingPtr& r) {
  std::vector<MultSet> out{trivial_mult_set(r), units_mult_set(r)};
  for (Elem x = 0; x < r->size(); ++x) out.push_back(closure(r, {x}));
  for (const auto& m : maximal_ideals(*r)) out.push_back(complement_of_maximal(r, m));
  return out;
}

}  // namespace fixtures
