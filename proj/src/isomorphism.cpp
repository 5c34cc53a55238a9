#include "noncent/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

namespace noncent {

namespace {

// (element order, centralizer size, conjugacy class size)
using ElementPrint = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<ElementPrint> element_prints(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<ElementPrint> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto c = centralizer_set(g, static_cast<Element>(x)).count();
    out[x] = {element_order(g, static_cast<Element>(x)), c, n / c};
  }
  return out;
}

std::size_t distinct_centralizers(const FiniteGroup& g) {
  std::unordered_set<ElementSet, ElementSetHash> cents;
  for (std::size_t x = 0; x < g.order(); ++x) cents.insert(centralizer_set(g, static_cast<Element>(x)));
  return cents.size();
}

class Search {
 public:
  Search(const FiniteGroup& a, const FiniteGroup& b, std::vector<ElementPrint> pa, std::vector<ElementPrint> pb)
      : a_(a), b_(b), pa_(std::move(pa)), pb_(std::move(pb)) {
    for (std::size_t y = 0; y < b_.order(); ++y) by_print_[pb_[y]].push_back(static_cast<Element>(y));
    choose_generators();
  }

  std::optional<std::vector<Element>> run() {
    images_.assign(gens_.size(), 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  void choose_generators() {
    ElementSet current(a_.order());
    current.insert(0);
    while (current.count() < a_.order()) {
      Element best = 0;
      std::size_t best_size = 0, best_candidates = 0;
      ElementSet best_set;
      for (std::size_t x = 1; x < a_.order(); ++x) {
        if (current.contains(static_cast<Element>(x))) continue;
        auto trial = gens_;
        trial.push_back(static_cast<Element>(x));
        auto s = closure(a_, current, trial);
        const auto size = s.count();
        const auto candidates = by_print_[pa_[x]].size();
        if (size > best_size || (size == best_size && candidates < best_candidates)) {
          best = static_cast<Element>(x);
          best_size = size;
          best_candidates = candidates;
          best_set = std::move(s);
        }
      }
      gens_.push_back(best);
      current = std::move(best_set);
    }
  }

  // Builds the map on <gens[0..=level]> from the chosen images; false on
  // any inconsistency, collision, or fingerprint mismatch.
  bool build_partial(std::size_t level) {
    const auto n = a_.order();
    map_.assign(n, kUnset);
    used_.assign(b_.order(), 0);
    map_[0] = 0;
    used_[0] = 1;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (std::size_t j = 0; j <= level; ++j) {
        const auto y = a_.mul(x, gens_[j]);
        const auto image = b_.mul(map_[x], images_[j]);
        if (map_[y] != kUnset) {
          if (map_[y] != image) return false;
          continue;
        }
        if (used_[image] || pa_[y] != pb_[image]) return false;
        map_[y] = image;
        used_[image] = 1;
        queue.push_back(y);
      }
    }
    return true;
  }

  bool extend(std::size_t level) {
    if (level == gens_.size()) return true;
    for (auto candidate : by_print_[pa_[gens_[level]]]) {
      images_[level] = candidate;
      if (build_partial(level) && extend(level + 1)) return true;
    }
    return false;
  }

  static constexpr Element kUnset = static_cast<Element>(-1);

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<ElementPrint> pa_, pb_;
  std::map<ElementPrint, std::vector<Element>> by_print_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder)
    throw Error(Errc::TooLarge, "isomorphism test above order " + std::to_string(kMaxIsomorphismOrder));
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (a.order() == 1) return std::vector<Element>{0};

  auto pa = element_prints(a);
  auto pb = element_prints(b);
  std::multiset<ElementPrint> ha(pa.begin(), pa.end()), hb(pb.begin(), pb.end());
  if (ha != hb) return std::nullopt;
  if (distinct_centralizers(a) != distinct_centralizers(b)) return std::nullopt;

  Search search(a, b, std::move(pa), std::move(pb));
  return search.run();
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Element>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<char> hit(b.order(), 0);
  for (auto y : map) {
    if (y >= b.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (map[a.mul(static_cast<Element>(x), static_cast<Element>(y))] != b.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace noncent
