#include "noncent/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "noncent/isomorphism.hpp"

namespace noncent {

std::string CheckResult::status() const {
  if (!applicable) return "n/a";
  if (inconclusive) return "inconclusive";
  if (passed) return "pass";
  return conjecture ? "counterexample" : "FAIL";
}

GroupContext::GroupContext(std::string label, FiniteGroup g)
    : label_(std::move(label)),
      group_(g),
      beta_(beta_partition(g)),
      center_(noncent::center(g)),
      quotient_(quotient(g, center_)) {
  regular_ = is_regular(beta_);
  induced_ = is_induced_regular(beta_);
  if (!g.is_abelian()) maximal_ = maximal_centralizers(beta_);
  orders_.resize(g.order());
  coset_orders_.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    orders_[x] = element_order(g, e);
    std::size_t k = 1;
    for (Element y = e; !center_.contains(y); y = g.mul(y, e)) ++k;
    coset_orders_[x] = k;
  }
}

namespace {

CheckResult start(const GroupContext& ctx, std::string_view id) {
  CheckResult r;
  r.check_id = std::string(id);
  r.group_label = ctx.label();
  r.group_order = ctx.group().order();
  r.applicable = true;
  return r;
}

CheckResult not_applicable(CheckResult r, std::string reason) {
  r.applicable = false;
  r.passed = true;
  r.reason = std::move(reason);
  return r;
}

void detail(CheckResult& r, std::string key, const std::string& value) { r.details.emplace_back(std::move(key), value); }
void detail(CheckResult& r, std::string key, std::size_t value) { detail(r, std::move(key), std::to_string(value)); }
void detail(CheckResult& r, std::string key, bool value) { detail(r, std::move(key), std::string(value ? "true" : "false")); }

void fail(CheckResult& r, std::string witness) {
  r.passed = false;
  r.witness.push_back(std::move(witness));
}

std::string element_witness(const GroupContext& ctx, Element x) {
  return "x=" + std::to_string(x) + " (" + ctx.group().label(x) + ")";
}

// G/Z(G) is C_p x C_p^... : returns p when the central quotient is
// elementary abelian of order p^k.
std::optional<std::uint64_t> quotient_elementary_abelian(const GroupContext& ctx, std::size_t k) {
  const auto& q = ctx.central_quotient();
  if (q.order() == 1 || !q.is_abelian()) return std::nullopt;
  const auto p = is_elementary_p(q);
  if (!p) return std::nullopt;
  std::size_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= *p;
  if (pk != q.order()) return std::nullopt;
  return p;
}

std::optional<std::uint64_t> quotient_elementary(const GroupContext& ctx) {
  const auto& q = ctx.central_quotient();
  if (q.order() == 1) return std::nullopt;
  return is_elementary_p(q);
}

bool all_degrees_equal(const GroupContext& ctx) {
  const auto& beta = ctx.beta();
  const auto n = ctx.group().order();
  std::optional<std::size_t> degree;
  for (std::size_t x = 0; x < n; ++x) {
    const auto d = n - beta.classes[beta.class_of[x]].size();
    if (degree && *degree != d) return false;
    degree = d;
  }
  return true;
}

std::size_t centralizer_index(const GroupContext& ctx, Element x) {
  return ctx.group().order() / ctx.beta().centralizers[ctx.beta().class_of[x]].count();
}

struct Decomposition {
  Subgroup h;
  Subgroup a;
};

// G = H x A with H the p-elements and A the central p'-elements, when that
// splitting exists.
std::optional<Decomposition> sylow_decomposition(const GroupContext& ctx, std::uint64_t p) {
  const auto& g = ctx.group();
  std::size_t pk = 1;
  std::size_t rest = g.order();
  while (rest % p == 0) {
    rest /= p;
    pk *= p;
  }
  ElementSet h(g.order()), a(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto o = ctx.order_of(static_cast<Element>(x));
    const bool coprime = std::gcd<std::size_t, std::size_t>(o, p) == 1;
    while (o % p == 0) o /= p;
    if (o == 1) h.insert(static_cast<Element>(x));
    if (coprime && ctx.center().contains(static_cast<Element>(x))) a.insert(static_cast<Element>(x));
  }
  if (h.count() != pk || a.count() != rest) return std::nullopt;
  try {
    return Decomposition{Subgroup::from_set(g, h), Subgroup::from_set(g, a)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::uint64_t two_part(std::size_t n) {
  std::uint64_t k = 1;
  while (n % 2 == 0) {
    n /= 2;
    k *= 2;
  }
  return k;
}

}  // namespace

CheckResult check_be0(const GroupContext& ctx) {
  auto r = start(ctx, "be0");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  detail(r, "cent_count", ctx.beta().size());
  if (ctx.beta().size() < 4) fail(r, "cent_count=" + std::to_string(ctx.beta().size()));
  return r;
}

CheckResult check_be(const GroupContext& ctx) {
  auto r = start(ctx, "be");
  const auto p = quotient_elementary_abelian(ctx, 2);
  if (!p) return not_applicable(r, "G/Z(G) is not C_p x C_p");
  detail(r, "p", *p);
  detail(r, "cent_count", ctx.beta().size());
  if (ctx.beta().size() != *p + 2) fail(r, "cent_count=" + std::to_string(ctx.beta().size()));
  return r;
}

CheckResult check_ba(const GroupContext& ctx) {
  auto r = start(ctx, "ba");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  const auto p = prime_factors(ctx.group().order()).front();
  if (ctx.index() != p * p * p) return not_applicable(r, "[G:Z(G)] is not p^3 for the smallest prime p");
  bool all_p2 = true;
  for (std::size_t x = 0; x < ctx.group().order(); ++x) {
    if (ctx.center().contains(static_cast<Element>(x))) continue;
    if (centralizer_index(ctx, static_cast<Element>(x)) != p * p) all_p2 = false;
  }
  const auto expected = all_p2 ? p * p + p + 2 : p * p + 2;
  detail(r, "p", p);
  detail(r, "all_indices_p2", all_p2);
  detail(r, "cent_count", ctx.beta().size());
  detail(r, "expected", expected);
  if (ctx.beta().size() != expected) fail(r, "cent_count=" + std::to_string(ctx.beta().size()));
  return r;
}

CheckResult check_ereg1(const GroupContext& ctx) {
  auto r = start(ctx, "ereg1");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  const auto& g = ctx.group();
  const bool regular = all_degrees_equal(ctx);
  bool classes_are_cosets = true;
  std::optional<Element> witness;
  for (std::size_t x = 0; x < g.order() && classes_are_cosets; ++x) {
    ElementSet coset(g.order());
    for (auto z : ctx.center().members()) coset.insert(g.mul(static_cast<Element>(x), z));
    ElementSet cls(g.order());
    for (auto y : ctx.beta().classes[ctx.beta().class_of[x]]) cls.insert(y);
    if (!(coset == cls)) {
      classes_are_cosets = false;
      witness = static_cast<Element>(x);
    }
  }
  detail(r, "regular", regular);
  detail(r, "classes_are_cosets", classes_are_cosets);
  if (regular != classes_are_cosets)
    fail(r, witness ? element_witness(ctx, *witness) : std::string("all classes are cosets"));
  return r;
}

CheckResult check_ereg2(const GroupContext& ctx) {
  auto r = start(ctx, "ereg2");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  const bool regular = all_degrees_equal(ctx);
  const bool count_matches = ctx.beta().size() == ctx.index();
  detail(r, "regular", regular);
  detail(r, "cent_count", ctx.beta().size());
  detail(r, "index", ctx.index());
  if (regular != count_matches) fail(r, "regular=" + std::string(regular ? "true" : "false"));
  return r;
}

CheckResult check_creg(const GroupContext& ctx) {
  auto r = start(ctx, "creg");
  if (ctx.abelian() || !ctx.regular_degree()) return not_applicable(r, "not a non-abelian regular group");
  const bool ok = is_elementary_abelian(ctx.central_quotient()) && *is_elementary_p(ctx.central_quotient()) == 2;
  detail(r, "quotient_order", ctx.index());
  detail(r, "quotient_elementary_abelian_2", ok);
  if (!ok) fail(r, "G/Z(G) is not an elementary abelian 2-group");
  return r;
}

CheckResult check_ccreg_c2c2(const GroupContext& ctx) {
  auto r = start(ctx, "ccreg_c2c2");
  const auto p = quotient_elementary_abelian(ctx, 2);
  if (!p || *p != 2) return not_applicable(r, "G/Z(G) is not C2 x C2");
  detail(r, "regular", ctx.regular_degree().has_value());
  if (!ctx.regular_degree()) fail(r, "not regular");
  return r;
}

CheckResult check_ccreg_c2cubed(const GroupContext& ctx) {
  auto r = start(ctx, "ccreg_c2cubed");
  const auto p = quotient_elementary_abelian(ctx, 3);
  if (!p || *p != 2) return not_applicable(r, "G/Z(G) is not C2 x C2 x C2");
  bool all_index_4 = true;
  std::optional<Element> odd_one;
  for (std::size_t x = 0; x < ctx.group().order() && all_index_4; ++x) {
    if (ctx.center().contains(static_cast<Element>(x))) continue;
    if (centralizer_index(ctx, static_cast<Element>(x)) != 4) {
      all_index_4 = false;
      odd_one = static_cast<Element>(x);
    }
  }
  const bool regular = ctx.regular_degree().has_value();
  detail(r, "regular", regular);
  detail(r, "all_indices_4", all_index_4);
  if (regular != all_index_4) fail(r, odd_one ? element_witness(ctx, *odd_one) : std::string("all indices are 4"));
  return r;
}

CheckResult check_ncen(const GroupContext& ctx) {
  auto r = start(ctx, "ncen");
  if (ctx.abelian() || !ctx.regular_degree()) return not_applicable(r, "not a non-abelian regular group");
  const auto& g = ctx.group();
  const auto& beta = ctx.beta();

  std::optional<std::vector<Subgroup>> center_subgroups;
  const auto z_group = as_group(ctx.center());
  if (z_group.order() <= 128) {
    try {
      center_subgroups = all_subgroups(z_group);
    } catch (const Error&) {
    }
  }

  std::size_t checked = 0;
  for (std::size_t i = 1; i < beta.size(); ++i) {
    const auto c = make_subgroup_unchecked(g, beta.centralizers[i]);
    const auto rep = beta.classes[i].front();
    if (!is_normal(g, c)) {
      fail(r, "C_G(" + element_witness(ctx, rep) + ") is not normal");
      continue;
    }
    if (!center_subgroups) {
      r.inconclusive = true;
      continue;
    }
    const auto q = quotient(g, c);
    bool embeds = false;
    for (const auto& s : *center_subgroups) {
      if (s.size() != q.order()) continue;
      if (is_isomorphic(q, as_group(s))) {
        embeds = true;
        break;
      }
    }
    if (!embeds) fail(r, "G/C_G(" + element_witness(ctx, rep) + ") does not embed in Z(G)");
    ++checked;
  }
  detail(r, "centralizers_checked", checked);
  if (r.inconclusive) r.reason = "center too large for the subgroup-embedding search";
  return r;
}

CheckResult check_preg(const GroupContext& ctx) {
  auto r = start(ctx, "preg");
  if (ctx.abelian() || !ctx.regular_degree()) return not_applicable(r, "not a non-abelian regular group");
  const auto n = *ctx.regular_degree();
  detail(r, "degree", n);
  if (prime_power_base(n)) fail(r, "degree " + std::to_string(n) + " is a prime power");
  return r;
}

CheckResult check_bound(const GroupContext& ctx) {
  auto r = start(ctx, "bound");
  if (ctx.abelian() || !ctx.regular_degree()) return not_applicable(r, "not a non-abelian regular group");
  const auto n = *ctx.regular_degree();
  const auto order = ctx.group().order();
  detail(r, "degree", n);
  if (n % 2 != 0) fail(r, "degree is odd");
  if (order % 8 != 0) fail(r, "|G| is not divisible by 8");
  if (n + 2 > order) fail(r, "n + 2 > |G|");
  if (3 * order > 4 * n) fail(r, "|G| > 4n/3");
  return r;
}

CheckResult check_big(const GroupContext& ctx) {
  auto r = start(ctx, "big");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  const auto order = ctx.group().order();
  if (two_part(order) < 8) return not_applicable(r, "|G| is not 2^k * odd with k >= 3");
  const bool regular = ctx.regular_degree().has_value();
  const auto dec = sylow_decomposition(ctx, 2);
  bool factor_regular = false;
  if (dec) factor_regular = is_regular(as_group(dec->h)).has_value();
  detail(r, "regular", regular);
  detail(r, "splits", dec.has_value());
  detail(r, "sylow_regular", factor_regular);
  if (regular) {
    if (!dec) {
      fail(r, "no decomposition H x A with A the odd part of Z(G)");
      return r;
    }
    if (!factor_regular) fail(r, "Sylow 2-subgroup is not regular");
    const auto rebuilt = direct_product(as_group(dec->h), as_group(dec->a));
    if (!is_regular(rebuilt)) fail(r, "H x A is not regular");
    if (order <= kMaxIsomorphismOrder && !is_isomorphic(rebuilt, ctx.group())) fail(r, "H x A is not isomorphic to G");
  } else if (dec && factor_regular) {
    fail(r, "G = H x A with H regular, yet G is not regular");
  }
  return r;
}

CheckResult check_lg(const GroupContext& ctx) {
  auto r = start(ctx, "lg");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  for (const auto& m : ctx.maximal()) {
    try {
      (void)h_subgroup(ctx.beta(), m.class_id);
    } catch (const Error&) {
      fail(r, "beta(" + element_witness(ctx, ctx.beta().classes[m.class_id].front()) + ") ∪ Z(G) is not a subgroup");
    }
  }
  detail(r, "maximal_centralizers", ctx.maximal().size());
  return r;
}

CheckResult check_lg1(const GroupContext& ctx) {
  auto r = start(ctx, "lg1");
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  const auto& beta = ctx.beta();
  std::size_t tested = 0;
  for (const auto& m : ctx.maximal()) {
    const auto& cent = beta.centralizers[m.class_id];
    if (cent.count() == beta.classes[m.class_id].size() + ctx.center().size()) continue;  // C = H_x
    ++tested;
    bool found = false;
    for (auto y : cent.members()) {
      if (beta.class_of[y] == m.class_id) continue;
      if (is_prime(ctx.coset_order(y))) {
        found = true;
        break;
      }
    }
    if (!found) fail(r, "no prime coset order in C_G(x) \\ beta(x) for " + element_witness(ctx, beta.classes[m.class_id].front()));
  }
  if (tested == 0) return not_applicable(r, "every maximal centralizer equals beta(x) ∪ Z(G)");
  detail(r, "centralizers_tested", tested);
  return r;
}

CheckResult check_lg2(const GroupContext& ctx) {
  auto r = start(ctx, "lg2");
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  const auto& beta = ctx.beta();
  std::size_t tested = 0;
  for (const auto& m : ctx.maximal()) {
    std::optional<std::size_t> odd_prime;
    for (auto y : beta.centralizers[m.class_id].members()) {
      if (beta.class_of[y] == m.class_id) continue;
      const auto o = ctx.coset_order(y);
      if (o != 2 && is_prime(o)) {
        odd_prime = o;
        break;
      }
    }
    if (!odd_prime) continue;
    ++tested;
    for (auto h : beta.classes[m.class_id]) {
      if (ctx.coset_order(h) != *odd_prime) {
        fail(r, "H_x/Z(G) is not elementary " + std::to_string(*odd_prime) + ": " + element_witness(ctx, h));
        break;
      }
    }
  }
  if (tested == 0) return not_applicable(r, "no odd prime coset order in any C_G(x) \\ beta(x)");
  detail(r, "centralizers_tested", tested);
  return r;
}

CheckResult check_mg(const GroupContext& ctx) {
  auto r = start(ctx, "mg");
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  const auto p = is_p_group(ctx.central_quotient());
  detail(r, "quotient_order", ctx.index());
  if (!p) fail(r, "G/Z(G) of order " + std::to_string(ctx.index()) + " is not a p-group");
  return r;
}

CheckResult check_pq_index(const GroupContext& ctx) {
  auto r = start(ctx, "pq_index");
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  const auto p = prime_power_base(ctx.index());
  if (!p) return not_applicable(r, "[G:Z(G)] is not a prime power");
  std::size_t q = 0;
  for (auto i = ctx.index(); i > 1; i /= *p) ++q;
  if (!is_prime(q)) return not_applicable(r, "[G:Z(G)] = p^q with q not prime");
  detail(r, "p", *p);
  detail(r, "q", q);
  const auto e = quotient_elementary(ctx);
  if (!e || *e != *p) fail(r, "G/Z(G) is not an elementary p-group");
  const auto expected = (*p - 1) * ctx.center().size();
  for (std::size_t i = 1; i < ctx.beta().size(); ++i)
    if (ctx.beta().classes[i].size() != expected) {
      fail(r, "class of " + element_witness(ctx, ctx.beta().classes[i].front()) + " has size " +
                  std::to_string(ctx.beta().classes[i].size()));
      break;
    }
  detail(r, "expected_class_size", expected);
  return r;
}

CheckResult check_cmg(const GroupContext& ctx) {
  auto r = start(ctx, "cmg");
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  if (ctx.group().order() % 2 == 0) return not_applicable(r, "even order");
  const auto& beta = ctx.beta();
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta.centralizers[i].count() == beta.classes[i].size() + ctx.center().size())
      return not_applicable(r, "some C_G(x) equals beta(x) ∪ Z(G)");
  const auto e = quotient_elementary(ctx);
  if (!e) fail(r, "G/Z(G) is not an elementary p-group");
  return r;
}

CheckResult check_pp(const GroupContext& ctx) {
  auto r = start(ctx, "pp");
  const auto p = quotient_elementary_abelian(ctx, 2);
  if (!p) return not_applicable(r, "G/Z(G) is not C_p x C_p");
  detail(r, "p", *p);
  detail(r, "induced_regular", ctx.induced_degree().has_value());
  if (!ctx.induced_degree()) fail(r, "not induced regular");
  return r;
}

CheckResult check_big1(const GroupContext& ctx) {
  auto r = start(ctx, "big1");
  if (ctx.abelian()) return not_applicable(r, "abelian");
  const bool induced = ctx.induced_degree().has_value();
  detail(r, "induced_regular", induced);
  if (induced) {
    const auto p = is_p_group(ctx.central_quotient());
    if (!p || *p == kTrivialGroupMarker) {
      fail(r, "G/Z(G) is not a p-group");
      return r;
    }
    detail(r, "p", *p);
    const auto dec = sylow_decomposition(ctx, *p);
    if (!dec) {
      fail(r, "no decomposition H x A with H the Sylow " + std::to_string(*p) + "-subgroup");
      return r;
    }
    if (!is_induced_regular(as_group(dec->h))) fail(r, "Sylow subgroup is not induced regular");
    const auto rebuilt = direct_product(as_group(dec->h), as_group(dec->a));
    if (!is_induced_regular(rebuilt)) fail(r, "H x A is not induced regular");
    return r;
  }
  for (auto p : prime_factors(ctx.group().order())) {
    const auto dec = sylow_decomposition(ctx, p);
    if (dec && is_induced_regular(as_group(dec->h))) {
      fail(r, "G = H x A with H an induced regular " + std::to_string(p) + "-group, yet G is not induced regular");
      break;
    }
  }
  return r;
}

CheckResult check_tconj(const GroupContext& ctx) {
  auto r = start(ctx, "tconj");
  r.conjecture = true;
  if (ctx.abelian() || !ctx.regular_degree()) return not_applicable(r, "not a non-abelian regular group");
  detail(r, "degree", *ctx.regular_degree());
  if (is_prime(*ctx.regular_degree())) fail(r, "degree " + std::to_string(*ctx.regular_degree()) + " is prime");
  return r;
}

CheckResult check_lco(const GroupContext& ctx) {
  auto r = start(ctx, "lco");
  r.conjecture = true;
  if (ctx.abelian() || !ctx.induced_degree()) return not_applicable(r, "not a non-abelian induced regular group");
  const auto e = quotient_elementary(ctx);
  detail(r, "quotient_abelian", ctx.central_quotient().is_abelian());
  detail(r, "quotient_elementary", e.has_value());
  if (!e) fail(r, "G/Z(G) is not an elementary p-group");
  return r;
}

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> checks{
      {"be0", check_be0, false},
      {"be", check_be, false},
      {"ba", check_ba, false},
      {"ereg1", check_ereg1, false},
      {"ereg2", check_ereg2, false},
      {"creg", check_creg, false},
      {"ccreg_c2c2", check_ccreg_c2c2, false},
      {"ccreg_c2cubed", check_ccreg_c2cubed, false},
      {"ncen", check_ncen, false},
      {"preg", check_preg, false},
      {"bound", check_bound, false},
      {"big", check_big, false},
      {"lg", check_lg, false},
      {"lg1", check_lg1, false},
      {"lg2", check_lg2, false},
      {"mg", check_mg, false},
      {"pq_index", check_pq_index, false},
      {"cmg", check_cmg, false},
      {"pp", check_pp, false},
      {"big1", check_big1, false},
      {"tconj", check_tconj, true},
      {"lco", check_lco, true},
  };
  return checks;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

namespace {

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& x, const CheckResult& y) {
    if (x.group_order != y.group_order) return x.group_order < y.group_order;
    if (x.group_label != y.group_label) return natural_less(x.group_label, y.group_label);
    return x.check_id < y.check_id;
  });
}

std::vector<CheckResult> run_one(const std::vector<LabeledGroup>& groups, CheckResult (*check)(const GroupContext&)) {
  std::vector<CheckResult> out;
  for (const auto& lg : groups) out.push_back(check(GroupContext(lg.label, lg.group)));
  sort_results(out);
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::vector<LabeledGroup>& groups, const std::vector<std::string>& ids) {
  std::vector<const CheckInfo*> selected;
  if (ids.empty()) {
    for (const auto& c : all_checks()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const auto it = std::find_if(all_checks().begin(), all_checks().end(), [&](const CheckInfo& c) { return c.id == id; });
      if (it == all_checks().end()) throw Error(Errc::InvalidArgument, "unknown check id '" + id + "'");
      selected.push_back(&*it);
    }
  }
  std::vector<CheckResult> out;
  for (const auto& lg : groups) {
    const GroupContext ctx(lg.label, lg.group);
    for (const auto* c : selected) out.push_back(c->run(ctx));
  }
  sort_results(out);
  return out;
}

std::vector<CheckResult> scan_conjecture_tconj(const std::vector<LabeledGroup>& groups) {
  return run_one(groups, check_tconj);
}

std::vector<CheckResult> scan_conjecture_lco(const std::vector<LabeledGroup>& groups) {
  return run_one(groups, check_lco);
}

bool suite_failed(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.applicable && !r.passed && !r.conjecture; });
}

namespace {

std::string join_details(const CheckResult& r) {
  std::string out;
  for (const auto& [k, v] : r.details) out += (out.empty() ? "" : ";") + k + ":" + v;
  return out;
}

std::string join_witness(const CheckResult& r) {
  std::string out;
  for (const auto& w : r.witness) out += (out.empty() ? "" : "; ") + w;
  return out;
}

}  // namespace

std::string format_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t applicable = 0, failed = 0, flagged = 0;
  for (const auto& r : results) {
    os << r.group_label;
    for (auto i = r.group_label.size(); i < 12; ++i) os << ' ';
    os << ' ' << r.check_id;
    for (auto i = r.check_id.size(); i < 14; ++i) os << ' ';
    os << ' ' << r.status();
    if (!r.applicable) {
      os << "  (" << r.reason << ")";
    } else if (!r.passed) {
      os << "  " << join_witness(r);
    } else if (!r.details.empty()) {
      os << "  " << join_details(r);
    }
    os << '\n';
    if (r.applicable) ++applicable;
    if (r.applicable && !r.passed) (r.conjecture ? flagged : failed)++;
  }
  os << "checks: " << results.size() << ", applicable: " << applicable << ", failed: " << failed
     << ", conjecture counterexamples: " << flagged << '\n';
  return os.str();
}

std::string format_results_key_value(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "group=" << r.group_label << " order=" << r.group_order << " check=" << r.check_id
       << " status=" << r.status();
    if (!r.applicable) os << " reason=\"" << r.reason << "\"";
    if (!r.details.empty()) os << " details=" << join_details(r);
    if (!r.witness.empty()) os << " witness=\"" << join_witness(r) << "\"";
    os << '\n';
  }
  return os.str();
}

}  // namespace noncent
