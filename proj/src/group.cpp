#include "noncent/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace noncent {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i == 0 ? "e" : "g" + std::to_string(i);
  return labels;
}

[[noreturn]] void not_a_group(const std::string& why) { throw Error(Errc::NotAGroup, why); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p) h = h * 1000003U ^ v;
    return h;
  }
};

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup make_group_unchecked(std::size_t n, std::vector<Element> table, std::vector<std::string> labels) {
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = n;
  data->table = std::move(table);
  data->labels = labels.empty() ? default_labels(n) : std::move(labels);
  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (data->table[a * n + b] == 0) {
        data->inverse[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  data->abelian = true;
  for (std::size_t a = 0; a < n && data->abelian; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (data->table[a * n + b] != data->table[b * n + a]) {
        data->abelian = false;
        break;
      }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows,
                                    std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) not_a_group("empty table");
  if (!labels.empty() && labels.size() != n)
    throw Error(Errc::InvalidArgument, "label count does not match table size");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) not_a_group("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) not_a_group("entry out of range in row " + std::to_string(i));
      table[i * n + j] = rows[i][j];
    }
  }

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i * n + j]]) not_a_group("row " + std::to_string(i) + " is not a permutation");
      seen[table[i * n + j]] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i * n + j]]) not_a_group("column " + std::to_string(j) + " is not a permutation");
      seen[table[i * n + j]] = 1;
    }
  }

  // Identity.
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e * n + j] == j && table[j * n + e] == j;
    if (ok) identity = e;
  }
  if (!identity) not_a_group("no identity element");

  if (*identity != 0) {
    const auto e = static_cast<Element>(*identity);
    auto relabel = [e](Element x) -> Element { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<Element> moved(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        moved[relabel(static_cast<Element>(i)) * n + relabel(static_cast<Element>(j))] =
            relabel(table[i * n + j]);
    table = std::move(moved);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  // Associativity: exhaustive up to 256 elements, sampled beyond.
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            not_a_group("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < 10 * n * n; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        not_a_group("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
    }
  }

  // Two-sided inverses.
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) not_a_group("element " + std::to_string(a) + " has no two-sided inverse");
  }

  return make_group_unchecked(n, std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::size_t cap) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(Errc::InvalidArgument, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw Error(Errc::InvalidArgument, "generator is not a bijection");
      hit[v] = 1;
    }
  }
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = y[x[i]];
    return out;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      auto y = compose(elements[head], g);
      if (index.contains(y)) continue;
      if (elements.size() >= cap) throw Error(Errc::ClosureExceeded, "closure exceeds " + std::to_string(cap));
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = cycle_notation(elements[i]);
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

std::vector<std::vector<Element>> FiniteGroup::rows() const {
  const auto n = order();
  std::vector<std::vector<Element>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto r = row(static_cast<Element>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), size_(members_.count()) {}

Subgroup make_subgroup_unchecked(const FiniteGroup& parent, ElementSet members) {
  return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::from_set(const FiniteGroup& parent, const ElementSet& members) {
  if (members.universe() != parent.order() || !members.contains(0))
    throw Error(Errc::NotASubgroup, "set does not contain the identity");
  const auto elems = members.members();
  for (auto a : elems) {
    if (!members.contains(parent.inv(a))) throw Error(Errc::NotASubgroup, "not closed under inverse");
    for (auto b : elems)
      if (!members.contains(parent.mul(a, b))) throw Error(Errc::NotASubgroup, "not closed under product");
  }
  if (parent.order() % elems.size() != 0) throw Error(Errc::NotASubgroup, "size does not divide group order");
  return Subgroup(parent, members);
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  ElementSet all(parent.order());
  for (std::size_t i = 0; i < parent.order(); ++i) all.insert(static_cast<Element>(i));
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  ElementSet one(parent.order());
  one.insert(0);
  return Subgroup(parent, std::move(one));
}

std::vector<Coset> left_cosets(const Subgroup& n) {
  const auto& g = n.parent();
  const auto members = n.members();
  std::vector<char> done(g.order(), 0);
  std::vector<Coset> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    Coset c{static_cast<Element>(x), {}};
    for (auto z : members) c.members.push_back(g.mul(static_cast<Element>(x), z));
    std::sort(c.members.begin(), c.members.end());
    for (auto y : c.members) done[y] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

Element power(const FiniteGroup& g, Element x, std::int64_t k) {
  if (k < 0) {
    x = g.inv(x);
    k = -k;
  }
  Element result = 0;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

ElementSet centralizer_set(const FiniteGroup& g, Element x) {
  ElementSet out(g.order());
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, static_cast<Element>(y)) == g.mul(static_cast<Element>(y), x)) out.insert(static_cast<Element>(y));
  return out;
}

Subgroup centralizer(const FiniteGroup& g, Element x) { return make_subgroup_unchecked(g, centralizer_set(g, x)); }

Subgroup center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y)
      central = g.mul(static_cast<Element>(x), static_cast<Element>(y)) ==
                g.mul(static_cast<Element>(y), static_cast<Element>(x));
    if (central) z.insert(static_cast<Element>(x));
  }
  return make_subgroup_unchecked(g, std::move(z));
}

ElementSet closure(const FiniteGroup& g, const ElementSet& start, std::span<const Element> generators) {
  ElementSet out = start;
  std::vector<Element> queue = start.members();
  if (!out.contains(0)) {
    out.insert(0);
    queue.push_back(0);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto s : generators) {
      const auto y = g.mul(x, s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seeds) {
  ElementSet start(g.order());
  start.insert(0);
  std::vector<Element> gens(seeds.begin(), seeds.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return make_subgroup_unchecked(g, closure(g, start, gens));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto members = h.members();
  for (std::size_t x = 1; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    for (auto m : members)
      if (!h.contains(g.mul(g.mul(gx, m), g.inv(gx)))) return false;
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "subgroup is not normal");
  const auto cosets = left_cosets(n);
  std::vector<Element> coset_of(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (auto x : cosets[i].members) coset_of[x] = static_cast<Element>(i);
  const auto q = cosets.size();
  std::vector<Element> table(q * q);
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels[i] = "[" + g.label(cosets[i].representative) + "]";
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = coset_of[g.mul(cosets[i].representative, cosets[j].representative)];
  }
  return make_group_unchecked(q, std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    labels[x] = x == 0 ? "e" : "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      table[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

FiniteGroup as_group(const Subgroup& h) {
  const auto& g = h.parent();
  const auto members = h.members();
  std::unordered_map<Element, Element> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Element>(i);
  const auto m = members.size();
  std::vector<Element> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(members[i]);
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local.at(g.mul(members[i], members[j]));
  }
  return make_group_unchecked(m, std::move(table), std::move(labels));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  const auto f = prime_factors(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::optional<std::uint64_t> is_p_group(const FiniteGroup& g) {
  if (g.order() == 1) return kTrivialGroupMarker;
  return prime_power_base(g.order());
}

std::optional<std::uint64_t> is_elementary_p(const FiniteGroup& g) {
  if (g.order() == 1) throw Error(Errc::TrivialGroup, "elementary p-group test needs a non-trivial group");
  const auto p = element_order(g, 1);
  if (!is_prime(p)) return std::nullopt;
  for (std::size_t x = 2; x < g.order(); ++x)
    if (element_order(g, static_cast<Element>(x)) != p) return std::nullopt;
  return p;
}

bool is_elementary_abelian(const FiniteGroup& g) {
  return g.order() > 1 && g.is_abelian() && is_elementary_p(g).has_value();
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> seeds;
  std::unordered_set<Element> seen;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto c = commutator(g, static_cast<Element>(x), static_cast<Element>(y));
      if (seen.insert(c).second) seeds.push_back(c);
    }
  return generated_subgroup(g, seeds);
}

Subgroup frattini(const FiniteGroup& g) {
  const auto p = is_p_group(g);
  if (!p) return frattini_by_maximal_subgroups(g);
  if (*p == kTrivialGroupMarker) return Subgroup::trivial(g);
  std::vector<Element> seeds;
  std::unordered_set<Element> seen;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xp = power(g, static_cast<Element>(x), static_cast<std::int64_t>(*p));
    if (seen.insert(xp).second) seeds.push_back(xp);
    for (std::size_t y = x + 1; y < g.order(); ++y) {
      const auto c = commutator(g, static_cast<Element>(x), static_cast<Element>(y));
      if (seen.insert(c).second) seeds.push_back(c);
    }
  }
  return generated_subgroup(g, seeds);
}

Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g) {
  const auto maxes = maximal_subgroups(g);
  if (maxes.empty()) return Subgroup::whole(g);
  ElementSet meet = maxes.front().set();
  for (const auto& m : maxes) meet &= m.set();
  return make_subgroup_unchecked(g, std::move(meet));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order, std::size_t max_count) {
  if (g.order() > max_order) throw Error(Errc::TooLarge, "subgroup lattice of order " + std::to_string(g.order()));
  const auto n = g.order();

  // One generator per cyclic subgroup.
  std::vector<Element> cyclic_gens;
  std::unordered_set<ElementSet, ElementSetHash> cyclic_seen;
  for (std::size_t x = 1; x < n; ++x) {
    const Element gen[] = {static_cast<Element>(x)};
    auto c = generated_subgroup(g, gen).set();
    if (cyclic_seen.insert(c).second) cyclic_gens.push_back(static_cast<Element>(x));
  }

  struct Node {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet one(n);
  one.insert(0);
  nodes.push_back({one, {}});
  seen.insert(one);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto c : cyclic_gens) {
      if (nodes[head].set.contains(c)) continue;
      auto gens = nodes[head].gens;
      gens.push_back(c);
      auto joined = closure(g, nodes[head].set, gens);
      if (!seen.insert(joined).second) continue;
      if (nodes.size() >= max_count)
        throw Error(Errc::TooLarge, "more than " + std::to_string(max_count) + " subgroups");
      nodes.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& node : nodes) out.push_back(make_subgroup_unchecked(g, std::move(node.set)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() == g.order()) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < subs.size() && maximal; ++j) {
      if (subs[j].size() == g.order() || subs[j].size() == subs[i].size()) continue;
      if (subs[i].set().is_subset_of(subs[j].set())) maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Element>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (std::size_t y = 0; y < n; ++y) {
      const auto c = g.mul(g.mul(static_cast<Element>(y), static_cast<Element>(x)), g.inv(static_cast<Element>(y)));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet current(g.order());
  current.insert(0);
  std::size_t size = 1;
  while (size < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    ElementSet best_set;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (current.contains(static_cast<Element>(x))) continue;
      auto trial = gens;
      trial.push_back(static_cast<Element>(x));
      auto s = closure(g, current, trial);
      const auto c = s.count();
      if (c > best_size) {
        best = static_cast<Element>(x);
        best_size = c;
        best_set = std::move(s);
        if (c == g.order()) break;
      }
    }
    gens.push_back(best);
    current = std::move(best_set);
    size = best_size;
  }
  return gens;
}

}  // namespace noncent
