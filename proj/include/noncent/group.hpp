#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noncent/element_set.hpp"
#include "noncent/error.hpp"

namespace noncent {

using Permutation = std::vector<std::uint32_t>;

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Copies share the underlying table, so
/// passing groups by value is cheap; the table is never mutated after
/// construction.
class FiniteGroup {
 public:
  /// Validates `rows` as a group table. If the identity is not at index 0 the
  /// elements are relabeled by swapping it with index 0.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& rows,
                                std::vector<std::string> labels = {});

  /// Breadth-first closure of the generated permutation group. Products are
  /// composed left to right: (x*y)(i) = y(x(i)).
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                       std::size_t cap = 10000);

  std::size_t order() const noexcept { return data_->order; }
  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  static constexpr Element identity() noexcept { return 0; }

  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + a * data_->order, data_->order};
  }
  const std::string& label(Element a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  bool is_abelian() const noexcept { return data_->abelian; }

  /// The table as nested rows, suitable for `from_table`.
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> labels;
    bool abelian = true;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend FiniteGroup make_group_unchecked(std::size_t, std::vector<Element>, std::vector<std::string>);
};

// Skips validation; callers guarantee a group table with identity at 0.
FiniteGroup make_group_unchecked(std::size_t n, std::vector<Element> table, std::vector<std::string> labels);

/// A subgroup of a parent group, stored as a member set.
class Subgroup {
 public:
  /// Checks closure; throws Errc::NotASubgroup otherwise.
  static Subgroup from_set(const FiniteGroup& parent, const ElementSet& members);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& set() const noexcept { return members_; }
  std::vector<Element> members() const { return members_.members(); }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  std::size_t index() const noexcept { return parent_.order() / size_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  Subgroup(FiniteGroup parent, ElementSet members);
  friend Subgroup make_subgroup_unchecked(const FiniteGroup&, ElementSet);

  FiniteGroup parent_;
  ElementSet members_;
  std::size_t size_ = 0;
};

Subgroup make_subgroup_unchecked(const FiniteGroup& parent, ElementSet members);

struct Coset {
  Element representative = 0;
  std::vector<Element> members;
};

// Left cosets x*N ordered by smallest member; the representative is that
// smallest member, so the coset of N itself comes first.
std::vector<Coset> left_cosets(const Subgroup& n);

Element power(const FiniteGroup& g, Element x, std::int64_t k);
std::size_t element_order(const FiniteGroup& g, Element x);
Element commutator(const FiniteGroup& g, Element x, Element y);

ElementSet centralizer_set(const FiniteGroup& g, Element x);
Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup center(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seeds);
ElementSet closure(const FiniteGroup& g, const ElementSet& start, std::span<const Element> generators);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Realizes a subgroup as a standalone group; element i of the result is
/// `members[i]` of the subgroup (ascending).
FiniteGroup as_group(const Subgroup& h);

/// Returns p when |G| = p^k, k >= 1; kTrivialGroupMarker for the trivial group.
inline constexpr std::uint64_t kTrivialGroupMarker = 1;
std::optional<std::uint64_t> is_p_group(const FiniteGroup& g);

/// Returns p when every non-identity element has order exactly p.
/// Throws Errc::TrivialGroup for the trivial group.
std::optional<std::uint64_t> is_elementary_p(const FiniteGroup& g);
bool is_elementary_abelian(const FiniteGroup& g);

/// Intersection of the maximal subgroups. For p-groups this is the subgroup
/// generated by p-th powers and commutators.
Subgroup frattini(const FiniteGroup& g);
Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);

/// Every subgroup, sorted by (size, smallest differing member).
/// Throws Errc::TooLarge above `max_order` or when more than `max_count`
/// subgroups exist.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order = 512,
                                    std::size_t max_count = 200000);
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);

/// Conjugacy classes ordered by smallest member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

/// A short generating set chosen greedily (each pick maximizes the size of
/// the generated subgroup, ties to the smallest index).
std::vector<Element> generating_set(const FiniteGroup& g);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Returns p when n = p^k with k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

}  // namespace noncent
