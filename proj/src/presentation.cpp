#include "noncent/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace noncent {

Word free_reduce(Word w) {
  Word out;
  for (const auto& s : w) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + generators[i];
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    if (relators[r].empty()) out += "1";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const auto& s = relators[r][i];
      if (i) out += "*";
      out += generators[s.generator];
      if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
  }
  return out + " >";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;
constexpr std::size_t kMaxWordLength = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    Presentation p;
    skip_space();
    expect('<', "'<'");
    skip_space();
    while (!at_end() && peek() != '|') {
      if (!is_ident_start(peek())) fail("generator name");
      auto name = identifier();
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) fail("distinct generator names");
      p.generators.push_back(std::move(name));
      skip_space();
      if (!at_end() && peek() == ',') {
        advance();
        skip_space();
      }
    }
    expect('|', "'|'");
    gens_ = &p.generators;
    skip_space();
    if (!at_end() && peek() != '>') {
      while (true) {
        p.relators.push_back(relator());
        skip_space();
        if (!at_end() && peek() == ',') {
          advance();
          skip_space();
          continue;
        }
        break;
      }
    }
    expect('>', "',' or '>'");
    skip_space();
    if (!at_end()) fail("end of input");
    return p;
  }

 private:
  Word relator() {
    auto lhs = word();
    skip_space();
    if (!at_end() && peek() == '=') {
      advance();
      skip_space();
      auto rhs = word();
      for (const auto& s : inverse(rhs)) lhs.push_back(s);
    }
    return free_reduce(std::move(lhs));
  }

  Word word() {
    Word w = term();
    skip_space();
    while (!at_end() && peek() == '*') {
      advance();
      skip_space();
      for (const auto& s : term()) w.push_back(s);
      check_length(w);
      skip_space();
    }
    return free_reduce(std::move(w));
  }

  Word term() {
    Word base;
    bool single = false;
    if (at_end()) fail("generator, '1' or '('");
    const char c = peek();
    if (c == '(') {
      advance();
      skip_space();
      base = word();
      skip_space();
      expect(')', "')'");
    } else if (c == '1') {
      advance();
    } else if (is_ident_start(c)) {
      const auto line = line_, column = column_;
      auto name = identifier();
      const auto it = std::find(gens_->begin(), gens_->end(), name);
      if (it == gens_->end())
        throw Error(Errc::UndeclaredGenerator,
                    name + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")");
      base.push_back({static_cast<std::size_t>(it - gens_->begin()), 1});
      single = true;
    } else {
      fail("generator, '1' or '('");
    }
    skip_space();
    if (at_end() || peek() != '^') return base;
    advance();
    skip_space();
    const auto k = exponent();
    if (single) {
      base.front().exponent = k;
      return free_reduce(std::move(base));
    }
    const auto unit = k < 0 ? inverse(base) : base;
    Word out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      for (const auto& s : unit) out.push_back(s);
      check_length(out);
    }
    return free_reduce(std::move(out));
  }

  std::int64_t exponent() {
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      advance();
      skip_space();
    }
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("integer exponent");
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponent) fail("exponent of magnitude at most 1000000");
      advance();
    }
    if (paren) {
      skip_space();
      expect(')', "')'");
    }
    return negative ? -value : value;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  void check_length(const Word& w) {
    if (w.size() > kMaxWordLength) fail("shorter relator");
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  void expect(char c, const char* what) {
    if (at_end() || peek() != c) fail(what);
    advance();
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(line_, column_, expected); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  const std::vector<std::string>* gens_ = nullptr;
};

// ---------------------------------------------------------------------------
// Coset enumeration

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(2 * p.generators.size()), max_(std::max<std::size_t>(max_cosets, 1)) {
    for (const auto& r : p.relators) {
      std::vector<int> letters;
      for (const auto& s : r) {
        const int col = static_cast<int>(2 * s.generator) + (s.exponent < 0 ? 1 : 0);
        for (std::int64_t i = 0; i < (s.exponent < 0 ? -s.exponent : s.exponent); ++i) letters.push_back(col);
      }
      if (!letters.empty()) {
        longest_ = std::max(longest_, letters.size());
        relators_.push_back(std::move(letters));
      }
    }
    add_row();
  }

  CosetTable run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live_ + longest_ + cols_ >= max_) {
        lookahead(c);
        if (c >= parent_.size()) break;
      }
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      for (std::size_t x = 0; x < cols_ && alive(c); ++x)
        if (at(c, x) < 0) define(static_cast<int>(c), static_cast<int>(x));
      if (live_ != parent_.size()) c = compact(c);
    }
    return standardize();
  }

 private:
  static int inv(int x) { return x ^ 1; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  void add_row() {
    parent_.push_back(static_cast<int>(parent_.size()));
    table_.resize(table_.size() + cols_, -1);
    ++live_;
  }

  void define(int c, int x) {
    if (live_ >= max_)
      throw Error(Errc::CosetLimitExceeded, "more than " + std::to_string(max_) + " live cosets");
    const int d = static_cast<int>(parent_.size());
    add_row();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  // HLT scan of relator r at coset c, defining cosets as needed.
  void scan_and_fill(int c, const std::vector<int>& r) {
    const int n = static_cast<int>(r.size());
    int f = c, b = c;
    int i = 0, j = n - 1;
    while (true) {
      while (i <= j && at(f, r[i]) >= 0) f = at(f, r[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(r[j])) >= 0) b = at(b, inv(r[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, r[i]) = b;
        at(b, inv(r[i])) = f;
        return;
      }
      define(f, r[i]);
    }
  }

  // Scan without defining: records deductions and coincidences only.
  void scan(int c, const std::vector<int>& r) {
    const int n = static_cast<int>(r.size());
    int f = c, b = c;
    int i = 0, j = n - 1;
    while (i <= j && at(f, r[i]) >= 0) f = at(f, r[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, inv(r[j])) >= 0) b = at(b, inv(r[j--]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      at(f, r[i]) = b;
      at(b, inv(r[i])) = f;
    }
  }

  void lookahead(std::size_t& c) {
    for (std::size_t d = 0; d < parent_.size(); ++d)
      for (const auto& r : relators_) {
        if (!alive(d)) break;
        scan(static_cast<int>(d), r);
      }
    if (live_ != parent_.size()) {
      // Resume at the first live coset not yet processed.
      const auto next = compact(c == 0 ? 0 : c - 1);
      c = c == 0 ? 0 : next + 1;
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        at(f, inv(x)) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inv(x)) >= 0) {
          merge(e1, at(f1, inv(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  // Drops dead rows and renumbers live cosets in their existing order.
  // Returns the new index of the last live coset at or before `position`.
  std::size_t compact(std::size_t position) {
    const auto old_size = parent_.size();
    std::vector<int> renumber(old_size, -1);
    int next = 0;
    std::size_t resume = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < old_size; ++c) {
      if (alive(c)) {
        renumber[c] = next++;
        if (c <= position) resume = static_cast<std::size_t>(renumber[c]);
      }
    }
    std::vector<int> table(static_cast<std::size_t>(next) * cols_, -1);
    for (std::size_t c = 0; c < old_size; ++c) {
      if (renumber[c] < 0) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const int v = at(c, x);
        table[static_cast<std::size_t>(renumber[c]) * cols_ + x] = v < 0 ? -1 : renumber[rep(v)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (int c = 0; c < next; ++c) parent_[c] = c;
    live_ = static_cast<std::size_t>(next);
    return resume;
  }

  CosetTable standardize() {
    const auto n = parent_.size();
    std::vector<int> order{0};
    std::vector<int> renumber(n, -1);
    renumber[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = at(order[head], x);
        if (d >= 0 && renumber[d] < 0) {
          renumber[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    CosetTable out;
    out.generators = cols_ / 2;
    out.rows.assign(order.size(), std::vector<std::uint32_t>(cols_));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = at(order[i], x);
        if (d < 0) throw Error(Errc::CosetLimitExceeded, "coset table incomplete");
        out.rows[i][x] = static_cast<std::uint32_t>(renumber[d]);
      }
    return out;
  }

  std::size_t cols_;
  std::size_t max_;
  std::size_t live_ = 0;
  std::size_t longest_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets) {
  return Enumerator(p, max_cosets).run();
}

FiniteGroup enumerate(const Presentation& p, std::size_t max_cosets) {
  const auto ct = enumerate_cosets(p, max_cosets);
  const auto n = ct.size();
  const auto cols = 2 * ct.generators;

  // Breadth-first spanning tree: coset d = coset parent[d] times letter[d].
  std::vector<int> tree_parent(n, -1), letter(n, -1);
  std::vector<std::size_t> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t x = 0; x < cols; ++x) {
      const auto d = ct.rows[order[head]][x];
      if (!seen[d]) {
        seen[d] = 1;
        tree_parent[d] = static_cast<int>(order[head]);
        letter[d] = static_cast<int>(x);
        order.push_back(d);
      }
    }

  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t c = 0; c < n; ++c) {
    rows[c][0] = static_cast<Element>(c);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto d = order[k];
      rows[c][d] = ct.rows[rows[c][static_cast<std::size_t>(tree_parent[d])]][static_cast<std::size_t>(letter[d])];
    }
  }

  std::vector<Word> words(n);
  std::vector<std::string> labels(n);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto d = order[k];
    words[d] = words[static_cast<std::size_t>(tree_parent[d])];
    words[d].push_back({static_cast<std::size_t>(letter[d] / 2), letter[d] % 2 == 0 ? 1 : -1});
    words[d] = free_reduce(std::move(words[d]));
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (words[d].empty()) {
      labels[d] = "e";
      continue;
    }
    for (std::size_t i = 0; i < words[d].size(); ++i) {
      if (i) labels[d] += "*";
      labels[d] += p.generators[words[d][i].generator];
      if (words[d][i].exponent != 1) labels[d] += "^" + std::to_string(words[d][i].exponent);
    }
  }
  return FiniteGroup::from_table(rows, std::move(labels));
}

}  // namespace noncent
