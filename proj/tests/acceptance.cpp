// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "noncent/analysis.hpp"
#include "noncent/catalog.hpp"
#include "noncent/families.hpp"
#include "noncent/graph.hpp"
#include "noncent/isomorphism.hpp"
#include "noncent/presentation.hpp"
#include "noncent/theorems.hpp"

using namespace noncent;

namespace {

std::string path(const std::string& file) { return std::string(NONCENT_CATALOG_DIR) + "/" + file; }

const std::vector<std::string> kCatalogs{"small.cat", "order8.cat", "order16.cat", "order32.cat", "order64.cat",
                                         "order243.cat"};

std::map<std::string, std::vector<LabeledGroup>>& cache() {
  static std::map<std::string, std::vector<LabeledGroup>> c;
  return c;
}

const std::vector<LabeledGroup>& catalog(const std::string& file) {
  auto it = cache().find(file);
  if (it == cache().end()) it = cache().emplace(file, materialize(load(path(file)))).first;
  return it->second;
}

std::vector<LabeledGroup> all_catalogs() {
  std::vector<LabeledGroup> out;
  for (const auto& f : kCatalogs)
    for (const auto& g : catalog(f)) out.push_back(g);
  return out;
}

std::vector<LabeledGroup> family_instances() {
  std::vector<std::string> specs;
  for (int m = 2; m <= 16; ++m) specs.push_back("dihedral:" + std::to_string(m));
  for (int n : {8, 16, 32}) specs.push_back("quaternion:" + std::to_string(n));
  for (int n : {8, 16, 32, 64}) specs.push_back("M:" + std::to_string(n));
  specs.push_back("heisenberg:3");
  specs.push_back("heisenberg:5");
  for (const char* base : {"dihedral:4", "quaternion:8", "dihedral:3", "M:16", "heisenberg:3"})
    for (int m = 2; m <= 5; ++m) specs.push_back(std::string(base) + " x cyclic:" + std::to_string(m));
  for (int n = 1; n <= 13; ++n) specs.push_back("cyclic:" + std::to_string(n));
  specs.push_back("elem:2:2");
  specs.push_back("elem:2:3");
  specs.push_back("elem:3:2");
  std::vector<LabeledGroup> out;
  for (const auto& s : specs) out.push_back({s, families::from_spec(s)});
  return out;
}

// "# degree n, reduced" comments attached to catalog entries.
std::map<std::size_t, std::set<std::string>> annotated_rows(const std::string& file) {
  std::ifstream in(path(file));
  const std::regex note(R"(#\s*degree\s+(\d+),\s*reduced)");
  std::map<std::size_t, std::set<std::string>> rows;
  std::optional<std::size_t> pending;
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (line.empty()) {
      pending.reset();
    } else if (std::regex_search(line, m, note)) {
      pending = std::stoul(m[1]);
    } else if (line.rfind("name:", 0) == 0 && pending) {
      auto label = line.substr(5);
      label.erase(0, label.find_first_not_of(' '));
      rows[*pending].insert(label);
    }
  }
  return rows;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

Outcome table_rows(const std::vector<std::string>& files, const std::map<std::size_t, std::size_t>& expected) {
  Outcome o;
  std::vector<LabeledGroup> groups;
  std::map<std::size_t, std::set<std::string>> annotated;
  for (const auto& f : files) {
    for (const auto& g : catalog(f)) groups.push_back(g);
    for (const auto& [n, labels] : annotated_rows(f)) annotated[n].insert(labels.begin(), labels.end());
  }
  std::map<std::size_t, std::set<std::string>> measured;
  for (const auto& row : table1_search(groups)) measured[row.degree].insert(row.labels.begin(), row.labels.end());
  for (const auto& [n, count] : expected) {
    o.require(measured[n].size() == count,
              "n=" + std::to_string(n) + ": " + std::to_string(measured[n].size()) + " groups, expected " + std::to_string(count));
    o.require(measured[n] == annotated[n], "n=" + std::to_string(n) + ": {" + join(measured[n]) + "} vs annotated {" +
                                               join(annotated[n]) + "}");
  }
  std::set<std::size_t> keys;
  for (const auto& [n, labels] : measured) keys.insert(n);
  for (auto n : keys)
    if (!expected.contains(n)) o.require(false, "unexpected row n=" + std::to_string(n));
  std::ostringstream d;
  for (const auto& [n, labels] : measured) d << (d.tellp() > 0 ? " " : "") << "n=" << n << ":" << labels.size();
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome criterion_1() {
  Outcome o;
  for (const char* spec : {"dihedral:4", "quaternion:8"}) {
    const auto r = regularity_report(families::from_spec(spec), spec);
    o.require(r.regular_degree == 6u, std::string(spec) + " is not 6-regular");
  }
  std::vector<LabeledGroup> pool;
  for (const auto& f : {"small.cat", "order8.cat"})
    for (const auto& g : catalog(f)) pool.push_back(g);
  for (const auto& g : family_instances())
    if (g.group.order() <= 13) pool.push_back(g);
  const auto d8 = families::dihedral(4), q8 = families::generalized_quaternion(8);
  std::size_t scanned = 0, six = 0;
  for (const auto& g : pool) {
    if (g.group.order() > 13) continue;
    ++scanned;
    if (is_regular(g.group) != 6u) continue;
    ++six;
    o.require(is_isomorphic(g.group, d8) || is_isomorphic(g.group, q8), g.label + " is 6-regular but not D8 or Q8");
  }
  if (o.pass) o.detail = std::to_string(scanned) + " groups of order <= 13 scanned, " + std::to_string(six) + " 6-regular, all D8 or Q8";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (std::size_t k = 3; k <= 6; ++k) {
    const auto order = std::size_t{1} << k;
    const auto expected = 3 * (std::size_t{1} << (k - 2));
    const auto d = is_regular(families::modular_M(order));
    o.require(d == expected, "M(2^" + std::to_string(k) + ") degree " + (d ? std::to_string(*d) : "none") +
                                 ", expected " + std::to_string(expected));
  }
  if (o.pass) o.detail = "degrees 6, 12, 24, 48 for k = 3..6";
  return o;
}

Outcome criterion_3() {
  return table_rows({"order8.cat", "order16.cat", "order32.cat"}, {{6, 2}, {12, 4}, {24, 7}, {30, 2}});
}

Outcome criterion_4() {
  Outcome o;
  o.require(catalog("order64.cat").size() == 45, "order-64 catalog does not have 45 entries");
  const auto rows = table_rows({"order64.cat"}, {{48, 10}, {56, 10}, {60, 20}});
  o.require(rows.pass, rows.detail);
  std::size_t verified = 0;
  for (const auto& [n, labels] : annotated_rows("order64.cat"))
    for (const auto& g : catalog("order64.cat"))
      if (labels.contains(g.label)) {
        o.require(is_regular(g.group) == n && is_reduced_regular(g.group), g.label + " is not reduced " + std::to_string(n) + "-regular");
        ++verified;
      }
  o.require(verified == 40, "annotated groups: " + std::to_string(verified));
  if (o.pass) o.detail = rows.detail + "; " + std::to_string(verified) + " groups verified reduced regular";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  auto groups = all_catalogs();
  for (const auto& g : family_instances()) groups.push_back(g);
  const auto results = run_suite(groups);
  std::size_t applicable = 0;
  std::set<std::string> exercised;
  for (const auto& r : results) {
    if (r.conjecture) continue;
    if (r.applicable) {
      ++applicable;
      exercised.insert(r.check_id);
    }
    o.require(r.passed && !r.inconclusive, r.group_label + " " + r.check_id + " " + r.status());
  }
  o.require(!suite_failed(results), "suite reports a failure");
  for (const auto& c : all_checks())
    if (!c.conjecture) o.require(exercised.contains(std::string(c.id)), std::string(c.id) + " never applicable");
  if (o.pass)
    o.detail = std::to_string(groups.size()) + " groups, " + std::to_string(applicable) + " applicable checks, all " +
               std::to_string(exercised.size()) + " checks exercised";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  auto groups = all_catalogs();
  for (const auto& g : family_instances()) groups.push_back(g);
  std::size_t regular = 0;
  for (const auto& g : groups) {
    if (g.group.is_abelian()) continue;
    const auto d = is_regular(g.group);
    if (!d) continue;
    ++regular;
    o.require(!prime_power_base(*d), g.label + " is " + std::to_string(*d) + "-regular");
  }
  for (const auto& r : scan_conjecture_tconj(groups)) o.require(r.passed, r.group_label + " has prime degree");
  // A 10-regular group needs 12 <= |G| <= 13; every group of order 11..13 is
  // in the catalogs or families.
  std::size_t candidates = 0;
  for (const auto& g : groups) {
    if (g.group.order() < 11 || g.group.order() > 13) continue;
    ++candidates;
    o.require(is_regular(g.group) != 10u, g.label + " is 10-regular");
  }
  o.require(candidates > 0, "no candidates of order 11..13");
  if (o.pass)
    o.detail = std::to_string(regular) + " non-abelian regular groups, none of prime-power degree; " +
               std::to_string(candidates) + " groups of order 11..13, none 10-regular";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (int i = 27; i <= 35; ++i) {
    const auto label = "[32," + std::to_string(i) + "]";
    const FiniteGroup* g = nullptr;
    for (const auto& e : catalog("order32.cat"))
      if (e.label == label) g = &e.group;
    if (!g) {
      o.require(false, label + " missing");
      continue;
    }
    const auto q = quotient(*g, center(*g));
    o.require(q.order() == 8 && is_elementary_abelian(q) && is_elementary_p(q) == 2u, label + ": G/Z is not C2^3");
    o.require(!is_regular(*g), label + " is regular");
  }
  if (o.pass) o.detail = "9 groups, G/Z = C2^3, none regular";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  auto groups = all_catalogs();
  for (const auto& g : family_instances()) groups.push_back(g);

  std::size_t graphs = 0, reduced = 0, presentations = 0, frattinis = 0;
  for (const auto& g : groups) {
    if (g.group.order() <= 256) {
      for (bool induced : {false, true})
        o.require(edges(build_graph(g.group, induced)) == oracle_graph(g.group, induced), g.label + ": graph differs from oracle");
      ++graphs;
    }
    const bool two_group = prime_power_base(g.group.order()) == 2u;
    if (two_group && g.group.order() <= 32 && !g.group.is_abelian() && is_regular(g.group)) {
      o.require(is_reduced_regular(g.group) == !brute_force_abelian_factor(g.group), g.label + ": reduced test disagrees");
      ++reduced;
    }
    if (two_group && g.group.order() <= 64) {
      o.require(frattini(g.group) == frattini_by_maximal_subgroups(g.group), g.label + ": Frattini routes disagree");
      ++frattinis;
    }
  }

  // Standard presentations against the family constructors.
  auto present = [&](const std::string& text, const FiniteGroup& expected, const std::string& name) {
    o.require(is_isomorphic(enumerate(parse_presentation(text)), expected), name + ": presentation differs");
    ++presentations;
  };
  for (std::size_t m = 2; m <= 16; ++m) {
    const auto s = std::to_string(m);
    present("< r,s | r^" + s + ", s^2, s*r*s = r^-1 >", families::dihedral(m), "dihedral:" + s);
  }
  for (std::size_t n : {8, 16, 32})
    present("< a,b | a^" + std::to_string(n / 2) + ", b^2 = a^" + std::to_string(n / 4) + ", b^-1*a*b = a^-1 >",
            families::generalized_quaternion(n), "quaternion:" + std::to_string(n));
  for (std::size_t n : {8, 16, 32, 64})
    present("< a,b | a^" + std::to_string(n / 2) + ", b^2, b*a*b = a^" + std::to_string(n / 4 + 1) + " >",
            families::modular_M(n), "M:" + std::to_string(n));
  for (std::size_t p : {3, 5}) {
    const auto s = std::to_string(p);
    present("< x,y,z | x^" + s + ", y^" + s + ", z^" + s + ", x^-1*y^-1*x*y = z, x*z = z*x, y*z = z*y >",
            families::heisenberg(p), "heisenberg:" + s);
  }
  // Every shipped presentation of order <= 32 that matches a family
  // instance's fingerprint is isomorphic to it, and each such family
  // instance has exactly one shipped counterpart.
  std::size_t matched = 0;
  for (const auto& f : family_instances()) {
    const auto order = f.group.order();
    if (order != 8 && order != 16 && order != 32) continue;
    std::size_t hits = 0;
    for (const auto& e : catalog("order" + std::to_string(order) + ".cat"))
      if (fingerprint(e.group) == fingerprint(f.group) && is_isomorphic(e.group, f.group)) ++hits;
    o.require(hits == 1, f.label + ": " + std::to_string(hits) + " shipped counterparts");
    ++matched;
  }
  if (o.pass)
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(reduced) + " reduced tests, " +
               std::to_string(presentations) + " presentations + " + std::to_string(matched) +
               " family/catalog matches, " + std::to_string(frattinis) + " Frattini comparisons";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (std::uint64_t p : {3, 5}) {
    const auto g = families::heisenberg(p);
    const auto beta = beta_partition(g);
    const auto z = beta.center_size();
    o.require(is_induced_regular(beta).has_value(), "heisenberg(" + std::to_string(p) + ") not induced regular");
    for (std::size_t i = 1; i < beta.size(); ++i)
      o.require(beta.classes[i].size() == (p - 1) * z, "heisenberg(" + std::to_string(p) + ") class size " +
                                                           std::to_string(beta.classes[i].size()));
    o.require(beta.size() == p + 2, "heisenberg(" + std::to_string(p) + ") |Cent| = " + std::to_string(beta.size()));
  }
  if (o.pass) o.detail = "p=3: class size 6, |Cent|=5; p=5: class size 20, |Cent|=7";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"D8 and Q8 are the only 6-regular groups of order <= 13", criterion_1},
      {"M(2^k) is regular of degree 3*2^(k-2) for k = 3..6", criterion_2},
      {"reduced regular rows n = 6, 12, 24, 30 for orders 8, 16, 32", criterion_3},
      {"reduced regular rows n = 48, 56, 60 for order 64", criterion_4},
      {"theorem suite green on catalogs and family instances", criterion_5},
      {"no regular group of prime-power degree; no 10-regular group", criterion_6},
      {"[32,27]..[32,35] have G/Z = C2^3 and are not regular", criterion_7},
      {"graph, reduced, presentation and Frattini oracles agree", criterion_8},
      {"heisenberg(3), heisenberg(5) induced regular with class size (p-1)|Z|", criterion_9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << "  [" << o.detail
              << "] (" << t.str() << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}
