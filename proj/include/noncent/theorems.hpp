#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noncent/analysis.hpp"

namespace noncent {

struct LabeledGroup {
  std::string label;
  FiniteGroup group;
};

/// Outcome of one statement on one group. A check whose hypotheses do not
/// hold is not applicable and passes vacuously, with `reason` saying why.
struct CheckResult {
  std::string check_id;
  std::string group_label;
  std::size_t group_order = 0;
  bool applicable = false;
  bool passed = true;
  bool inconclusive = false;
  bool conjecture = false;
  std::string reason;
  std::vector<std::string> witness;
  std::vector<std::pair<std::string, std::string>> details;

  std::string status() const;
};

/// Everything the checks share about one group, computed once.
class GroupContext {
 public:
  GroupContext(std::string label, FiniteGroup g);

  const std::string& label() const noexcept { return label_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const BetaPartition& beta() const noexcept { return beta_; }
  const Subgroup& center() const noexcept { return center_; }
  const FiniteGroup& central_quotient() const noexcept { return quotient_; }
  std::size_t index() const noexcept { return group_.order() / center_.size(); }
  bool abelian() const noexcept { return group_.is_abelian(); }
  const std::optional<std::size_t>& regular_degree() const noexcept { return regular_; }
  const std::optional<std::size_t>& induced_degree() const noexcept { return induced_; }
  const std::vector<MaximalCentralizer>& maximal() const noexcept { return maximal_; }

  std::size_t order_of(Element x) const { return orders_[x]; }
  /// Order of xZ(G) in G/Z(G).
  std::size_t coset_order(Element x) const { return coset_orders_[x]; }

 private:
  std::string label_;
  FiniteGroup group_;
  BetaPartition beta_;
  Subgroup center_;
  FiniteGroup quotient_;
  std::optional<std::size_t> regular_;
  std::optional<std::size_t> induced_;
  std::vector<MaximalCentralizer> maximal_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> coset_orders_;
};

CheckResult check_be0(const GroupContext& ctx);
CheckResult check_be(const GroupContext& ctx);
CheckResult check_ba(const GroupContext& ctx);
CheckResult check_ereg1(const GroupContext& ctx);
CheckResult check_ereg2(const GroupContext& ctx);
CheckResult check_creg(const GroupContext& ctx);
CheckResult check_ccreg_c2c2(const GroupContext& ctx);
CheckResult check_ccreg_c2cubed(const GroupContext& ctx);
CheckResult check_ncen(const GroupContext& ctx);
CheckResult check_preg(const GroupContext& ctx);
CheckResult check_bound(const GroupContext& ctx);
CheckResult check_big(const GroupContext& ctx);
CheckResult check_lg(const GroupContext& ctx);
CheckResult check_lg1(const GroupContext& ctx);
CheckResult check_lg2(const GroupContext& ctx);
CheckResult check_mg(const GroupContext& ctx);
CheckResult check_pq_index(const GroupContext& ctx);
CheckResult check_cmg(const GroupContext& ctx);
CheckResult check_pp(const GroupContext& ctx);
CheckResult check_big1(const GroupContext& ctx);

// Open statements: failures are reported, never counted as suite failures.
CheckResult check_tconj(const GroupContext& ctx);
CheckResult check_lco(const GroupContext& ctx);

struct CheckInfo {
  std::string_view id;
  CheckResult (*run)(const GroupContext&);
  bool conjecture;
};

/// All checks in their canonical order.
const std::vector<CheckInfo>& all_checks();

/// Runs the selected checks (all when `ids` is empty) on every group.
/// Output is sorted by (group order, label, check id). Throws
/// Errc::InvalidArgument on an unknown id.
std::vector<CheckResult> run_suite(const std::vector<LabeledGroup>& groups, const std::vector<std::string>& ids = {});

/// Regular groups whose degree is prime (expected: none).
std::vector<CheckResult> scan_conjecture_tconj(const std::vector<LabeledGroup>& groups);

/// Status of "G/Z(G) is an elementary p-group" for every induced regular
/// non-abelian group.
std::vector<CheckResult> scan_conjecture_lco(const std::vector<LabeledGroup>& groups);

/// True when some applicable, non-conjecture check failed.
bool suite_failed(const std::vector<CheckResult>& results);

std::string format_results_text(const std::vector<CheckResult>& results);
std::string format_results_key_value(const std::vector<CheckResult>& results);

/// Orders labels like "[16,3]" < "[16,13]" by comparing digit runs
/// numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace noncent
