#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "noncent/group.hpp"

namespace noncent {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// generator^exponent, exponent non-zero
struct Syllable {
  std::size_t generator = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Merges adjacent syllables on the same generator and drops zero exponents.
Word free_reduce(Word w);
Word inverse(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string to_string() const;
};

/// Parses `< gens | relators >`.
///
/// Generators are identifiers separated by commas or whitespace. A relator is
/// a word or an equation `w1 = w2` (stored as w1 * w2^-1). Words are built
/// from generators, `1` (the empty word), parentheses, `*` and `^` with a
/// possibly negative integer exponent. Relators are freely reduced.
///
/// Throws ParseError, or Error(Errc::UndeclaredGenerator) naming the
/// offending identifier.
Presentation parse_presentation(std::string_view text);

/// A complete coset table over the trivial subgroup in standard (breadth
/// first) order. Column 2g is generator g, column 2g+1 its inverse.
struct CosetTable {
  std::size_t generators = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  std::size_t size() const noexcept { return rows.size(); }
};

/// Hasse-Lee-Trotter coset enumeration with a lookahead pass when the live
/// coset count nears `max_cosets`. Throws Errc::CosetLimitExceeded.
CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Cayley table of the presented group; element i is coset i of the
/// standardized table, labeled by its breadth-first representative word.
FiniteGroup enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace noncent
