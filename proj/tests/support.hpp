#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncent/catalog.hpp"
#include "noncent/families.hpp"

namespace testing {

inline std::string catalog_path(const std::string& name) { return std::string(NONCENT_CATALOG_DIR) + "/" + name; }

inline const std::vector<noncent::LabeledGroup>& catalog(const std::string& name) {
  static std::map<std::string, std::vector<noncent::LabeledGroup>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, noncent::materialize(noncent::load(catalog_path(name)))).first;
  return it->second;
}

inline std::vector<std::string> shipped_catalog_names() {
  return {"small.cat", "order8.cat", "order16.cat", "order32.cat", "order64.cat", "order243.cat"};
}

inline std::vector<noncent::LabeledGroup> all_shipped() {
  std::vector<noncent::LabeledGroup> out;
  for (const auto& n : shipped_catalog_names())
    for (const auto& g : catalog(n)) out.push_back(g);
  return out;
}

inline const noncent::FiniteGroup& by_label(const std::string& file, const std::string& label) {
  for (const auto& g : catalog(file))
    if (g.label == label) return g.group;
  throw std::runtime_error("no " + label + " in " + file);
}

/// Family instances over the documented parameter ranges.
inline std::vector<std::string> family_specs() {
  std::vector<std::string> specs;
  for (int m = 2; m <= 16; ++m) specs.push_back("dihedral:" + std::to_string(m));
  for (int n : {8, 16, 32}) specs.push_back("quaternion:" + std::to_string(n));
  for (int n : {8, 16, 32, 64}) specs.push_back("M:" + std::to_string(n));
  specs.push_back("heisenberg:3");
  specs.push_back("heisenberg:5");
  for (const char* base : {"dihedral:4", "quaternion:8", "dihedral:3", "M:16", "heisenberg:3"})
    for (int m = 2; m <= 5; ++m) specs.push_back(std::string(base) + " x cyclic:" + std::to_string(m));
  return specs;
}

inline std::vector<noncent::LabeledGroup> family_instances() {
  std::vector<noncent::LabeledGroup> out;
  for (const auto& s : family_specs()) out.push_back({s, noncent::families::from_spec(s)});
  return out;
}

/// Same group with its elements shuffled (identity kept at 0).
inline noncent::FiniteGroup relabel(const noncent::FiniteGroup& g, std::mt19937& rng) {
  const auto n = g.order();
  std::vector<noncent::Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<noncent::Element>> rows(n, std::vector<noncent::Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      rows[perm[a]][perm[b]] = perm[g.mul(static_cast<noncent::Element>(a), static_cast<noncent::Element>(b))];
  return noncent::FiniteGroup::from_table(rows);
}

}  // namespace testing
