#include "noncent/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace noncent {

std::vector<std::size_t> BetaPartition::class_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.size());
  return out;
}

BetaPartition beta_partition(const FiniteGroup& g) {
  BetaPartition beta{g, {}, std::vector<std::size_t>(g.order()), {}};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto c = centralizer_set(g, static_cast<Element>(x));
    auto [it, inserted] = ids.try_emplace(c, beta.classes.size());
    if (inserted) {
      beta.classes.emplace_back();
      beta.centralizers.push_back(std::move(c));
    }
    beta.classes[it->second].push_back(static_cast<Element>(x));
    beta.class_of[x] = it->second;
  }
  return beta;
}

std::size_t cent_count(const FiniteGroup& g) { return beta_partition(g).size(); }

std::optional<std::size_t> is_regular(const BetaPartition& beta) {
  const auto z = beta.center_size();
  for (const auto& c : beta.classes)
    if (c.size() != z) return std::nullopt;
  return beta.parent.order() - z;
}

std::optional<std::size_t> is_regular(const FiniteGroup& g) { return is_regular(beta_partition(g)); }

std::optional<std::size_t> is_induced_regular(const BetaPartition& beta) {
  if (beta.size() == 1) return 0;
  const auto s = beta.classes[1].size();
  for (std::size_t i = 2; i < beta.size(); ++i)
    if (beta.classes[i].size() != s) return std::nullopt;
  return beta.parent.order() - beta.center_size() - s;
}

std::optional<std::size_t> is_induced_regular(const FiniteGroup& g) { return is_induced_regular(beta_partition(g)); }

std::vector<MaximalCentralizer> maximal_centralizers(const BetaPartition& beta) {
  if (beta.parent.is_abelian()) throw Error(Errc::AbelianGroup, "abelian groups have no proper centralizers");
  std::vector<MaximalCentralizer> out;
  for (std::size_t i = 1; i < beta.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 1; j < beta.size() && maximal; ++j)
      if (j != i && beta.centralizers[i].is_subset_of(beta.centralizers[j])) maximal = false;
    if (maximal) out.push_back({i, make_subgroup_unchecked(beta.parent, beta.centralizers[i])});
  }
  return out;
}

std::vector<MaximalCentralizer> maximal_centralizers(const FiniteGroup& g) {
  return maximal_centralizers(beta_partition(g));
}

Subgroup h_subgroup(const BetaPartition& beta, std::size_t class_id) {
  if (class_id == 0 || class_id >= beta.size())
    throw Error(Errc::NotMaximal, "class " + std::to_string(class_id) + " is not a proper centralizer class");
  for (std::size_t j = 1; j < beta.size(); ++j)
    if (j != class_id && beta.centralizers[class_id].is_subset_of(beta.centralizers[j]))
      throw Error(Errc::NotMaximal, "centralizer of class " + std::to_string(class_id) + " is not maximal");
  ElementSet h(beta.parent.order());
  for (auto x : beta.classes[0]) h.insert(x);
  for (auto x : beta.classes[class_id]) h.insert(x);
  return Subgroup::from_set(beta.parent, h);
}

Subgroup h_subgroup(const FiniteGroup& g, std::size_t class_id) { return h_subgroup(beta_partition(g), class_id); }

// ---------------------------------------------------------------------------

namespace {

// Searches homomorphisms G -> Z_m (given on the generators) sending z to 1.
class RetractionSearch {
 public:
  RetractionSearch(const FiniteGroup& g, std::vector<Element> gens, Element z, std::size_t m)
      : g_(g), gens_(std::move(gens)), z_(z), m_(m), values_(gens_.size(), 0) {
    for (auto x : gens_) orders_.push_back(element_order(g_, x));
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t level) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    map_.assign(g_.order(), unset);
    map_[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (std::size_t j = 0; j <= level; ++j) {
        const auto y = g_.mul(x, gens_[j]);
        const auto v = (map_[x] + values_[j]) % m_;
        if (map_[y] == unset) {
          map_[y] = v;
          queue.push_back(y);
        } else if (map_[y] != v) {
          return false;
        }
      }
    }
    return map_[z_] == unset || map_[z_] == 1 % m_;
  }

  bool extend(std::size_t level) {
    if (level == gens_.size()) return true;
    for (std::size_t v = 0; v < m_; ++v) {
      if ((orders_[level] * v) % m_ != 0) continue;
      values_[level] = v;
      if (consistent(level) && extend(level + 1)) return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  std::vector<Element> gens_;
  Element z_;
  std::size_t m_;
  std::vector<std::size_t> values_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> map_;
};

}  // namespace

std::optional<CyclicFactor> cyclic_direct_factor(const FiniteGroup& g) {
  const auto z_members = center(g).members();
  if (z_members.size() == 1) return std::nullopt;
  const auto gens = generating_set(g);
  std::unordered_set<ElementSet, ElementSetHash> tried;
  for (auto z : z_members) {
    if (z == 0) continue;
    const Element seed[] = {z};
    if (!tried.insert(generated_subgroup(g, seed).set()).second) continue;
    const auto m = element_order(g, z);
    auto retraction = RetractionSearch(g, gens, z, m).run();
    if (!retraction) continue;
    ElementSet kernel(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      if ((*retraction)[x] == 0) kernel.insert(static_cast<Element>(x));
    return CyclicFactor{make_subgroup_unchecked(g, std::move(kernel)), z};
  }
  return std::nullopt;
}

bool is_reduced_regular(const FiniteGroup& g) {
  const auto p = is_p_group(g);
  if (g.is_abelian() || !p || *p != 2 || !is_regular(g))
    throw Error(Errc::NotRegular2Group, "reduced regularity is defined for regular non-abelian 2-groups");
  // Z(G) inside the Frattini subgroup rules out any cyclic direct factor.
  if (center(g).set().is_subset_of(frattini(g).set())) return true;
  return !cyclic_direct_factor(g).has_value();
}

std::optional<AbelianFactor> brute_force_abelian_factor(const FiniteGroup& g) {
  if (g.order() > 64) throw Error(Errc::TooLarge, "brute-force factor search above order 64");
  const auto z = center(g);
  const auto subs = all_subgroups(g);
  for (const auto& a : subs) {
    if (a.size() == 1 || !a.set().is_subset_of(z.set())) continue;
    for (const auto& h : subs) {
      if (h.size() * a.size() != g.order()) continue;
      if ((h.set() & a.set()).count() != 1) continue;
      return AbelianFactor{h, a};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Run-length form of an ascending sequence: "4x2,5x4".
std::string runs(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    out += (out.empty() ? "" : ",") + std::to_string(v[i]) + "x" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

RegularityReport regularity_report(const FiniteGroup& g, std::string label) {
  const auto beta = beta_partition(g);
  RegularityReport r;
  r.label = std::move(label);
  r.order = g.order();
  r.center_size = beta.center_size();
  r.cent_count = beta.size();
  r.index = g.order() / r.center_size;
  r.degree_sequence.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) r.degree_sequence.push_back(g.order() - beta.classes[beta.class_of[x]].size());
  std::sort(r.degree_sequence.begin(), r.degree_sequence.end());
  r.regular_degree = is_regular(beta);
  r.is_regular = r.regular_degree.has_value();
  r.induced_degree = is_induced_regular(beta);
  r.is_induced_regular = r.induced_degree.has_value();
  const auto p = is_p_group(g);
  if (r.is_regular && !g.is_abelian() && p && *p == 2) r.is_reduced = is_reduced_regular(g);
  r.class_sizes = beta.class_sizes();
  return r;
}

std::string RegularityReport::to_text() const {
  std::ostringstream os;
  os << "group            " << label << "\n"
     << "order            " << order << "\n"
     << "center size      " << center_size << "\n"
     << "|Cent(G)|        " << cent_count << "\n"
     << "[G:Z(G)]         " << index << "\n"
     << "degree sequence  " << runs(degree_sequence) << "\n"
     << "regular          " << (is_regular ? "yes, degree " + std::to_string(*regular_degree) : "no") << "\n"
     << "induced regular  " << (is_induced_regular ? "yes, degree " + std::to_string(*induced_degree) : "no") << "\n"
     << "reduced          " << (is_reduced ? (*is_reduced ? "yes" : "no") : "n/a") << "\n"
     << "class sizes      " << join(class_sizes) << "\n";
  return os.str();
}

std::string RegularityReport::to_key_value() const {
  std::ostringstream os;
  os << "label=" << label << "\n"
     << "order=" << order << "\n"
     << "center_size=" << center_size << "\n"
     << "cent_count=" << cent_count << "\n"
     << "index=" << index << "\n"
     << "degree_sequence=" << runs(degree_sequence) << "\n"
     << "regular=" << (is_regular ? "true" : "false") << "\n"
     << "degree=" << opt(regular_degree) << "\n"
     << "induced_regular=" << (is_induced_regular ? "true" : "false") << "\n"
     << "induced_degree=" << opt(induced_degree) << "\n"
     << "reduced=" << (is_reduced ? (*is_reduced ? "true" : "false") : "n/a") << "\n"
     << "class_sizes=" << join(class_sizes) << "\n";
  return os.str();
}

}  // namespace noncent
