#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncent/group.hpp"

namespace noncent {

/// Partition of G into classes of elements with equal centralizers.
///
/// Class 0 is the center (the class of the identity); the remaining classes
/// are ordered by their smallest member. `centralizers[i]` is the common
/// centralizer of class i.
struct BetaPartition {
  FiniteGroup parent;
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<ElementSet> centralizers;

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t center_size() const noexcept { return classes.front().size(); }
  std::vector<std::size_t> class_sizes() const;
};

BetaPartition beta_partition(const FiniteGroup& g);

/// |Cent(G)|, the number of distinct centralizers.
std::size_t cent_count(const FiniteGroup& g);

/// Degree n = |G| - |Z(G)| when every class has size |Z(G)|. Abelian groups
/// give 0 (one part, edgeless graph).
std::optional<std::size_t> is_regular(const FiniteGroup& g);
std::optional<std::size_t> is_regular(const BetaPartition& beta);

/// Degree of the graph on G \ Z(G) when all non-central classes have equal
/// size. Abelian groups are vacuously induced regular with degree 0.
std::optional<std::size_t> is_induced_regular(const FiniteGroup& g);
std::optional<std::size_t> is_induced_regular(const BetaPartition& beta);

struct MaximalCentralizer {
  std::size_t class_id = 0;
  Subgroup centralizer;
};

/// Proper centralizers that are maximal under inclusion among proper
/// centralizers. Throws Errc::AbelianGroup.
std::vector<MaximalCentralizer> maximal_centralizers(const FiniteGroup& g);
std::vector<MaximalCentralizer> maximal_centralizers(const BetaPartition& beta);

/// The set beta(x) ∪ Z(G) for a class whose centralizer is maximal.
/// Throws Errc::NotMaximal, or Errc::NotASubgroup if the set is not closed.
Subgroup h_subgroup(const FiniteGroup& g, std::size_t class_id);
Subgroup h_subgroup(const BetaPartition& beta, std::size_t class_id);

/// G = K x <z>: K normal, z central, K ∩ <z> = 1.
struct CyclicFactor {
  Subgroup complement;
  Element generator = 0;
};

/// Finds a non-trivial central cyclic direct factor by searching for
/// retractions G -> <z> onto central cyclic subgroups.
std::optional<CyclicFactor> cyclic_direct_factor(const FiniteGroup& g);

/// A regular non-abelian 2-group is reduced when it has no non-trivial
/// abelian direct factor. Throws Errc::NotRegular2Group.
bool is_reduced_regular(const FiniteGroup& g);

struct AbelianFactor {
  Subgroup complement;
  Subgroup factor;
};

/// Exhaustive search over central subgroups A != 1 and subgroups H with
/// |H||A| = |G| and H ∩ A = 1. Throws Errc::TooLarge above order 64.
std::optional<AbelianFactor> brute_force_abelian_factor(const FiniteGroup& g);

struct RegularityReport {
  std::string label;
  std::size_t order = 0;
  std::size_t center_size = 0;
  std::size_t cent_count = 0;
  std::size_t index = 0;
  std::vector<std::size_t> degree_sequence;  // ascending
  bool is_regular = false;
  std::optional<std::size_t> regular_degree;
  bool is_induced_regular = false;
  std::optional<std::size_t> induced_degree;
  std::optional<bool> is_reduced;  // set for regular non-abelian 2-groups
  std::vector<std::size_t> class_sizes;

  std::string to_text() const;
  std::string to_key_value() const;
};

RegularityReport regularity_report(const FiniteGroup& g, std::string label);

}  // namespace noncent
