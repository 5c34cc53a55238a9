#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noncent/group.hpp"
#include "noncent/presentation.hpp"
#include "noncent/theorems.hpp"

namespace noncent {

enum class EntryKind { Table, Perm, Presentation };

std::string_view to_string(EntryKind kind) noexcept;

/// A malformed catalog file. `line()` is 1-based.
class CatalogFormatError : public Error {
 public:
  CatalogFormatError(const std::string& source, std::size_t line, const std::string& reason)
      : Error(Errc::FormatError, source + ":" + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// Coset cap for presentation entries: NONCENT_MAX_COSETS when set to a
/// positive integer, kDefaultMaxCosets otherwise.
std::size_t max_cosets_from_env();

class CatalogEntry {
 public:
  std::string label;
  EntryKind kind = EntryKind::Table;
  std::size_t order = 0;
  std::vector<std::vector<Element>> table;         // kind table
  std::size_t degree = 0;                           // kind perm
  std::vector<std::vector<std::uint32_t>> generators;
  std::string presentation;                         // kind presentation
  std::string source;
  std::size_t line = 0;

  /// Builds the group on first use. Throws Errc::OrderMismatch when the
  /// result does not have the declared order.
  const FiniteGroup& group() const;

 private:
  mutable std::optional<FiniteGroup> group_;
};

std::vector<CatalogEntry> parse_catalog(std::string_view text, const std::string& source = "<string>");
std::vector<CatalogEntry> load(const std::string& path);

/// Loads several files; labels must be unique across all of them.
std::vector<CatalogEntry> load_all(const std::vector<std::string>& paths);

std::vector<LabeledGroup> materialize(const std::vector<CatalogEntry>& entries);

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::size_t center_size = 0;
  std::size_t cent_count = 0;
  std::vector<std::size_t> beta_sizes;   // sorted
  std::vector<std::size_t> class_sizes;  // sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

struct DedupResult {
  std::string label;
  std::optional<std::string> duplicate_of;  // first earlier isomorphic label
};

/// Flags every group isomorphic to an earlier one. Throws Errc::TooLarge
/// above kMaxIsomorphismOrder.
std::vector<DedupResult> dedup(const std::vector<LabeledGroup>& groups);
std::vector<DedupResult> dedup(const std::vector<CatalogEntry>& entries);

struct Table1Row {
  std::size_t degree = 0;
  std::vector<std::string> labels;
};

/// Reduced regular non-abelian 2-groups grouped by degree, rows ascending,
/// labels in natural order.
std::vector<Table1Row> table1_search(const std::vector<LabeledGroup>& groups);
std::vector<Table1Row> table1_search(const std::vector<CatalogEntry>& entries);

}  // namespace noncent
