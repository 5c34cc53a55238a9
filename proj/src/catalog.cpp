#include "noncent/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "noncent/analysis.hpp"
#include "noncent/isomorphism.hpp"
#include "noncent/presentation.hpp"

namespace noncent {

std::string_view to_string(EntryKind kind) noexcept {
  switch (kind) {
    case EntryKind::Table: return "table";
    case EntryKind::Perm: return "perm";
    case EntryKind::Presentation: return "presentation";
  }
  return "?";
}

std::size_t max_cosets_from_env() {
  if (const char* v = std::getenv("NONCENT_MAX_COSETS")) {
    std::size_t n = 0;
    const std::string_view s(v);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size() && n > 0) return n;
  }
  return kDefaultMaxCosets;
}

const FiniteGroup& CatalogEntry::group() const {
  if (group_) return *group_;
  FiniteGroup g = [&] {
    switch (kind) {
      case EntryKind::Table: return FiniteGroup::from_table(table);
      case EntryKind::Perm:
        try {
          return FiniteGroup::from_permutations(degree, generators, order);
        } catch (const Error& e) {
          if (e.code() != Errc::ClosureExceeded) throw;
          throw Error(Errc::OrderMismatch, label + ": declared " + std::to_string(order) + ", generated group is larger");
        }
      case EntryKind::Presentation: break;
    }
    return enumerate(parse_presentation(presentation), max_cosets_from_env());
  }();
  if (g.order() != order)
    throw Error(Errc::OrderMismatch, label + ": declared " + std::to_string(order) + ", actual " + std::to_string(g.order()));
  group_ = std::move(g);
  return *group_;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

class CatalogParser {
 public:
  CatalogParser(std::string_view text, std::string source) : source_(std::move(source)) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto nl = text.find('\n', start);
      const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
      const auto hash = raw.find('#');
      lines_.push_back(trim(raw.substr(0, hash)));
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  std::vector<CatalogEntry> run() {
    std::vector<CatalogEntry> out;
    std::set<std::string> labels;
    while (true) {
      while (pos_ < lines_.size() && lines_[pos_].empty()) ++pos_;
      if (pos_ >= lines_.size()) break;
      auto entry = parse_entry();
      if (!labels.insert(entry.label).second)
        throw Error(Errc::DuplicateLabel, source_ + ":" + std::to_string(entry.line) + ": " + entry.label);
      out.push_back(std::move(entry));
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const { throw CatalogFormatError(source_, pos_ + 1, reason); }
  [[noreturn]] void fail_field(const std::string& reason) const { throw CatalogFormatError(source_, field_line_, reason); }

  bool at_entry_end() const { return pos_ >= lines_.size() || lines_[pos_].empty(); }

  // Reads "key: value" from the current line.
  std::string field(std::string_view key) {
    if (at_entry_end()) fail("expected '" + std::string(key) + ":'");
    const auto& l = lines_[pos_];
    const auto colon = l.find(':');
    if (colon == std::string::npos || trim(std::string_view(l).substr(0, colon)) != key)
      fail("expected '" + std::string(key) + ":'");
    field_line_ = ++pos_;
    auto value = trim(std::string_view(l).substr(colon + 1));
    if (value.empty()) fail_field("empty value for '" + std::string(key) + "'");
    return value;
  }

  std::size_t number(const std::string& text) const {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail_field("expected a number, got '" + text + "'");
    return n;
  }

  std::vector<std::uint32_t> numbers(const std::string& text) const {
    std::vector<std::uint32_t> out;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) out.push_back(static_cast<std::uint32_t>(number(tok)));
    return out;
  }

  CatalogEntry parse_entry() {
    CatalogEntry e;
    e.source = source_;
    e.line = pos_ + 1;
    e.label = field("name");
    const auto kind = field("kind");
    if (kind == "table") e.kind = EntryKind::Table;
    else if (kind == "perm") e.kind = EntryKind::Perm;
    else if (kind == "presentation") e.kind = EntryKind::Presentation;
    else fail_field("unknown kind '" + kind + "'");
    e.order = number(field("order"));
    if (e.order == 0) fail_field("order must be positive");
    switch (e.kind) {
      case EntryKind::Table: parse_table(e); break;
      case EntryKind::Perm: parse_perm(e); break;
      case EntryKind::Presentation: e.presentation = field("pres"); break;
    }
    if (!at_entry_end()) fail("unexpected line in entry '" + e.label + "'");
    return e;
  }

  void parse_table(CatalogEntry& e) {
    while (!at_entry_end()) {
      field_line_ = pos_ + 1;
      auto row = numbers(lines_[pos_]);
      const auto width = e.table.empty() ? row.size() : e.table.front().size();
      if (row.size() != width) fail("table row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width));
      for (auto v : row)
        if (v >= width) fail("table entry " + std::to_string(v) + " out of range");
      e.table.emplace_back(row.begin(), row.end());
      ++pos_;
    }
    if (e.table.empty()) fail("missing table");
    if (e.table.size() != e.table.front().size()) fail("table is not square");
    if (e.table.size() != e.order)
      throw Error(Errc::OrderMismatch, e.label + ": declared " + std::to_string(e.order) + ", actual " +
                                           std::to_string(e.table.size()));
  }

  void parse_perm(CatalogEntry& e) {
    e.degree = number(field("degree"));
    while (!at_entry_end()) {
      const auto g = numbers(field("gen"));
      if (g.size() != e.degree)
        fail_field("generator has " + std::to_string(g.size()) + " points, expected " + std::to_string(e.degree));
      e.generators.push_back(g);
    }
    if (e.generators.empty() && e.order != 1) fail("missing 'gen:' lines");
  }

  std::string source_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  std::size_t field_line_ = 0;
};

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text, const std::string& source) {
  return CatalogParser(text, source).run();
}

std::vector<CatalogEntry> load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FormatError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), path);
}

std::vector<CatalogEntry> load_all(const std::vector<std::string>& paths) {
  std::vector<CatalogEntry> out;
  std::set<std::string> labels;
  for (const auto& p : paths)
    for (auto& e : load(p)) {
      if (!labels.insert(e.label).second) throw Error(Errc::DuplicateLabel, p + ":" + std::to_string(e.line) + ": " + e.label);
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<LabeledGroup> materialize(const std::vector<CatalogEntry>& entries) {
  std::vector<LabeledGroup> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.label, e.group()});
  return out;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  for (std::size_t x = 0; x < g.order(); ++x) ++f.element_orders[element_order(g, static_cast<Element>(x))];
  const auto beta = beta_partition(g);
  f.center_size = beta.center_size();
  f.cent_count = beta.size();
  f.beta_sizes = beta.class_sizes();
  std::sort(f.beta_sizes.begin(), f.beta_sizes.end());
  for (const auto& c : conjugacy_classes(g)) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

std::vector<DedupResult> dedup(const std::vector<LabeledGroup>& groups) {
  for (const auto& lg : groups)
    if (lg.group.order() > kMaxIsomorphismOrder)
      throw Error(Errc::TooLarge, lg.label + " has order " + std::to_string(lg.group.order()));
  std::vector<Fingerprint> prints;
  prints.reserve(groups.size());
  for (const auto& lg : groups) prints.push_back(fingerprint(lg.group));
  std::vector<DedupResult> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    DedupResult r{groups[i].label, std::nullopt};
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j].duplicate_of || !(prints[i] == prints[j])) continue;
      if (is_isomorphic(groups[i].group, groups[j].group)) {
        r.duplicate_of = groups[j].label;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DedupResult> dedup(const std::vector<CatalogEntry>& entries) { return dedup(materialize(entries)); }

std::vector<Table1Row> table1_search(const std::vector<LabeledGroup>& groups) {
  std::map<std::size_t, std::vector<std::string>> rows;
  for (const auto& lg : groups) {
    const auto& g = lg.group;
    if (g.is_abelian() || prime_power_base(g.order()) != 2) continue;
    const auto degree = is_regular(g);
    if (!degree || !is_reduced_regular(g)) continue;
    rows[*degree].push_back(lg.label);
  }
  std::vector<Table1Row> out;
  for (auto& [n, labels] : rows) {
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    out.push_back({n, std::move(labels)});
  }
  return out;
}

std::vector<Table1Row> table1_search(const std::vector<CatalogEntry>& entries) {
  return table1_search(materialize(entries));
}

}  // namespace noncent
