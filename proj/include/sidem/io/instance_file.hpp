#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../construct.hpp"
#include "../mult_set.hpp"

namespace sidem::io {

using json = nlohmann::ordered_json;

/// A field of an instance file is missing or wrong. The message starts with
/// the dotted path of the offending field, e.g. "ring.one: missing".
class InstanceFileError : public PresentationError {
 public:
  InstanceFileError(const std::string& path, const std::string& detail)
      : PresentationError(path + ": " + detail), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct RingBlock {
  RingPtr ring;
  std::vector<RingPtr> factors;  // set when the block is a product
};

struct ModuleBlock {
  ModulePtr module;
  std::vector<ModulePtr> factors;  // componentwise factors over a product ring
};

struct LoadedInstance {
  RingPtr ring;
  ModulePtr module;
  MultSet mult_set;
  std::optional<Submodule> submodule;
  std::vector<ModulePtr> factors;
};

namespace detail {

inline const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InstanceFileError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InstanceFileError(path + "." + key, "missing");
  return *it;
}

inline std::uint32_t need_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InstanceFileError(path, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) throw InstanceFileError(path, "integer out of range");
  return static_cast<std::uint32_t>(v);
}

inline const json& need_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InstanceFileError(path, "expected an array");
  return j;
}

inline std::vector<std::uint32_t> uint_list(const json& j, const std::string& path) {
  need_array(j, path);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(need_uint(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::string kind_of(const json& j, const std::string& path) {
  if (!j.is_object()) throw InstanceFileError(path, "expected an object");
  auto it = j.find("kind");
  if (it == j.end()) return "raw";
  if (!it->is_string()) throw InstanceFileError(path + ".kind", "expected a string");
  return it->get<std::string>();
}

/// Coordinates of one element: an array, or a bare integer when there is a single coordinate.
inline Coords parse_coords(const json& j, const sidem::detail::Radix& radix, const std::string& path) {
  Coords c;
  if (j.is_array()) {
    c = uint_list(j, path);
  } else if (radix.rank() == 1) {
    c = {need_uint(j, path)};
  } else {
    throw InstanceFileError(path, "expected an array of " + std::to_string(radix.rank()) + " coordinates");
  }
  if (c.size() != radix.rank())
    throw InstanceFileError(path, "expected " + std::to_string(radix.rank()) + " coordinate(s), got " +
                                      std::to_string(c.size()));
  if (!radix.valid_coords(c)) throw InstanceFileError(path, "coordinate out of range");
  return c;
}

inline std::vector<std::vector<Coords>> parse_table(const json& j, std::size_t rows, std::size_t cols,
                                                   std::size_t width, const std::string& path) {
  need_array(j, path);
  if (j.size() != rows) throw InstanceFileError(path, "expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<Coords>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string pi = path + "[" + std::to_string(i) + "]";
    need_array(j[i], pi);
    if (j[i].size() != cols) throw InstanceFileError(pi, "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      const std::string pk = pi + "[" + std::to_string(k) + "]";
      Coords c = uint_list(j[i][k], pk);
      if (c.size() != width) throw InstanceFileError(pk, "expected " + std::to_string(width) + " coordinate(s)");
      out[i].push_back(std::move(c));
    }
  }
  return out;
}

template <class F>
auto rethrow_at(const std::string& path, F build) {
  try {
    return build();
  } catch (const InstanceFileError&) {
    throw;
  } catch (const AlgebraError& e) {
    throw InstanceFileError(path, e.what());
  }
}

inline bool is_cyclic_ring(const Ring& r) { return r.presentation() == cyclic_ring_presentation(r.size()); }

}  // namespace detail

inline ModuleBlock parse_module(const json& j, const RingBlock& ring, const std::string& path = "module");

inline RingBlock parse_ring(const json& j, const std::string& path = "ring") {
  using namespace detail;
  const std::string kind = kind_of(j, path);
  if (kind == "zn") {
    const auto n = need_uint(need(j, "n", path), path + ".n");
    if (n < 1) throw InstanceFileError(path + ".n", "must be at least 1");
    return {rethrow_at(path, [&] { return cyclic_ring(n); }), {}};
  }
  if (kind == "product") {
    const json& fs = need_array(need(j, "factors", path), path + ".factors");
    if (fs.empty()) throw InstanceFileError(path + ".factors", "empty");
    RingBlock out;
    for (std::size_t i = 0; i < fs.size(); ++i)
      out.factors.push_back(parse_ring(fs[i], path + ".factors[" + std::to_string(i) + "]").ring);
    out.ring = rethrow_at(path, [&] { return product_ring(out.factors); });
    if (out.factors.size() == 1) out.factors.clear();
    return out;
  }
  if (kind == "idealization") {
    RingBlock base = parse_ring(need(j, "base", path), path + ".base");
    ModuleBlock m = parse_module(need(j, "module", path), base, path + ".module");
    return {rethrow_at(path, [&] { return idealization(base.ring, m.module).ring; }), {}};
  }
  if (kind != "raw") throw InstanceFileError(path + ".kind", "unknown ring kind '" + kind + "'");
  RingPresentation pres;
  pres.additive_orders = uint_list(need(j, "orders", path), path + ".orders");
  const std::size_t k = pres.additive_orders.size();
  for (std::size_t i = 0; i < k; ++i)
    if (pres.additive_orders[i] < 1) throw InstanceFileError(path + ".orders[" + std::to_string(i) + "]", "must be positive");
  pres.one = uint_list(need(j, "one", path), path + ".one");
  if (pres.one.size() != k) throw InstanceFileError(path + ".one", "expected " + std::to_string(k) + " coordinate(s)");
  pres.mul_table = parse_table(need(j, "mul_table", path), k, k, k, path + ".mul_table");
  return {rethrow_at(path, [&] { return Ring::create(std::move(pres)); }), {}};
}

inline ModuleBlock parse_module(const json& j, const RingBlock& ring, const std::string& path) {
  using namespace detail;
  const std::string kind = kind_of(j, path);
  if (kind == "regular") {
    ModuleBlock out{regular_module(ring.ring), {}};
    for (const auto& f : ring.factors) out.factors.push_back(regular_module(f));
    return out;
  }
  if (kind == "zd") {
    const auto d = need_uint(need(j, "d", path), path + ".d");
    if (!is_cyclic_ring(*ring.ring)) throw InstanceFileError(path, "zd modules need a ring of kind zn");
    if (d < 1 || ring.ring->size() % d != 0)
      throw InstanceFileError(path + ".d", "must divide n = " + std::to_string(ring.ring->size()));
    return {cyclic_module(ring.ring, d), {}};
  }
  if (kind == "product") {
    const json& fs = need_array(need(j, "factors", path), path + ".factors");
    if (ring.factors.empty() || ring.factors.size() != fs.size())
      throw InstanceFileError(path + ".factors", "needs a product ring with " + std::to_string(fs.size()) + " factors");
    ModuleBlock out;
    for (std::size_t i = 0; i < fs.size(); ++i)
      out.factors.push_back(
          parse_module(fs[i], RingBlock{ring.factors[i], {}}, path + ".factors[" + std::to_string(i) + "]").module);
    out.module = rethrow_at(path, [&] { return product_module(ring.ring, out.factors); });
    return out;
  }
  if (kind == "direct_sum") {
    const json& fs = need_array(need(j, "summands", path), path + ".summands");
    if (fs.empty()) throw InstanceFileError(path + ".summands", "empty");
    std::vector<ModulePtr> parts;
    for (std::size_t i = 0; i < fs.size(); ++i)
      parts.push_back(parse_module(fs[i], RingBlock{ring.ring, {}}, path + ".summands[" + std::to_string(i) + "]").module);
    return {rethrow_at(path, [&] { return direct_sum(ring.ring, parts); }), {}};
  }
  if (kind != "raw") throw InstanceFileError(path + ".kind", "unknown module kind '" + kind + "'");
  ModulePresentation pres;
  pres.additive_orders = uint_list(need(j, "orders", path), path + ".orders");
  const std::size_t k = pres.additive_orders.size();
  for (std::size_t i = 0; i < k; ++i)
    if (pres.additive_orders[i] < 1) throw InstanceFileError(path + ".orders[" + std::to_string(i) + "]", "must be positive");
  pres.action_table =
      parse_table(need(j, "action_table", path), ring.ring->generator_count(), k, k, path + ".action_table");
  return {rethrow_at(path, [&] { return Module::create(ring.ring, std::move(pres)); }), {}};
}

inline std::vector<Elem> parse_elements(const json& j, const sidem::detail::Radix& radix, const std::string& path) {
  detail::need_array(j, path);
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(radix.index(detail::parse_coords(j[i], radix, path + "[" + std::to_string(i) + "]")));
  return out;
}

inline LoadedInstance load_instance(const json& j) {
  if (!j.is_object()) throw InstanceFileError("<root>", "expected an object");
  RingBlock rb = parse_ring(detail::need(j, "ring", "<root>"), "ring");
  ModuleBlock mb = j.contains("module") ? parse_module(j["module"], rb, "module") : parse_module(json{{"kind", "regular"}}, rb);
  LoadedInstance out{rb.ring, mb.module, trivial_mult_set(rb.ring), std::nullopt, mb.factors};
  if (j.contains("mult_set")) {
    const json& ms = j["mult_set"];
    auto gens = parse_elements(detail::need(ms, "generators", "mult_set"), rb.ring->radix(), "mult_set.generators");
    out.mult_set = closure(rb.ring, gens);
  }
  if (j.contains("submodule")) {
    const json& sb = j["submodule"];
    auto gens = parse_elements(detail::need(sb, "generators", "submodule"), mb.module->radix(), "submodule.generators");
    out.submodule = submodule_generated(*mb.module, gens);
  }
  return out;
}

/// Parses JSON text; syntax errors carry the line and column.
inline LoadedInstance load_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceFileError("<json>", e.what());
  }
  return load_instance(j);
}

inline LoadedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFileError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance_text(buf.str());
}

inline json coords_json(const Coords& c) { return json(c); }

inline json ring_raw_json(const Ring& r) {
  const auto& p = r.presentation();
  return json{{"orders", p.additive_orders}, {"one", p.one}, {"mul_table", p.mul_table}};
}

inline json module_raw_json(const Module& m) {
  const auto& p = m.presentation();
  return json{{"orders", p.additive_orders}, {"action_table", p.action_table}};
}

inline json ring_elements_json(const Ring& r, std::span<const Elem> xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(r.coords(x));
  return out;
}

inline json module_elements_json(const Module& m, std::span<const Elem> xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(m.coords(x));
  return out;
}

/// The instance with every block in raw form; reloads to the same presentations and sets.
inline json to_raw_json(const LoadedInstance& inst) {
  json out{{"ring", ring_raw_json(*inst.ring)},
           {"module", module_raw_json(*inst.module)},
           {"mult_set", {{"generators", ring_elements_json(*inst.ring, inst.mult_set.generators)}}}};
  if (inst.submodule) out["submodule"] = {{"generators", module_elements_json(*inst.module, inst.submodule->generators)}};
  return out;
}

/// "1:0,0:1" -> two elements with coordinates (1,0) and (0,1). An empty string is the empty list.
inline std::vector<Elem> parse_element_list(const std::string& text, const sidem::detail::Radix& radix, const std::string& what) {
  std::vector<Elem> out;
  if (text.empty()) return out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    Coords c;
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, ':')) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        c.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::logic_error&) {
        throw InstanceFileError(what, "bad coordinate '" + part + "'");
      }
    }
    if (c.size() != radix.rank() || !radix.valid_coords(c))
      throw InstanceFileError(what, "'" + item + "' is not an element (" + std::to_string(radix.rank()) + " coordinate(s))");
    out.push_back(radix.index(c));
  }
  return out;
}

}  // namespace sidem::io
