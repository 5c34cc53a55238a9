#include "noncent/families.hpp"

#include <charconv>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace noncent::families {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

FiniteGroup tabulate(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                     std::vector<std::string> labels) {
  if (n > kMaxFamilyOrder) throw Error(Errc::TooLarge, "family instance of order " + std::to_string(n));
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = static_cast<Element>(mul(x, y));
  return FiniteGroup::from_table(rows, std::move(labels));
}

std::string power_label(const std::string& name, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

// Labels for elements a^i b^j stored at index i + m*j.
std::vector<std::string> two_generator_labels(std::size_t m, std::size_t j_max, const std::string& a,
                                              const std::string& b) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < j_max; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      std::string s = power_label(a, i);
      const auto t = power_label(b, j);
      if (!t.empty()) s += s.empty() ? t : " " + t;
      labels.push_back(s.empty() ? "e" : s);
    }
  return labels;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group needs n >= 1");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i == 0 ? "e" : power_label("a", i);
  return tabulate(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; }, std::move(labels));
}

FiniteGroup elementary_abelian(std::uint64_t p, std::size_t k) {
  if (!is_prime(p) || k == 0) throw Error(Errc::InvalidArgument, "elementary abelian group needs prime p and k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxFamilyOrder) throw Error(Errc::TooLarge, "elementary abelian group too large");
  }
  // Coordinates in base p, first factor most significant.
  auto mul = [p, k](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return out;
  };
  return tabulate(n, mul, {});
}

FiniteGroup dihedral(std::size_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "dihedral group needs m >= 2");
  // r^i s^a at index i + m*a; s r^k = r^-k s.
  auto mul = [m](std::size_t x, std::size_t y) {
    const auto i = x % m, a = x / m, k = y % m, b = y / m;
    const auto rot = a == 0 ? (i + k) % m : (i + m - k) % m;
    return rot + m * ((a + b) % 2);
  };
  return tabulate(2 * m, mul, two_generator_labels(m, 2, "r", "s"));
}

FiniteGroup generalized_quaternion(std::size_t order) {
  if (order < 8 || !is_power_of_two(order))
    throw Error(Errc::InvalidArgument, "generalized quaternion order must be a power of two >= 8");
  const auto m = order / 2;  // order of a
  const auto half = m / 2;   // b^2 = a^half
  auto mul = [m, half](std::size_t x, std::size_t y) {
    const auto i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return (i + k) % m + m * l;
    const auto rot = (i + m - k) % m;  // a^i b a^k = a^(i-k) b
    if (l == 0) return rot + m;
    return (rot + half) % m;
  };
  return tabulate(order, mul, two_generator_labels(m, 2, "a", "b"));
}

FiniteGroup modular_M(std::size_t order) {
  if (order < 8 || !is_power_of_two(order))
    throw Error(Errc::InvalidArgument, "modular group order must be a power of two >= 8");
  const auto m = order / 2;
  const auto t = order / 4 + 1;  // b a b = a^t, and t^2 = 1 mod m
  auto mul = [m, t](std::size_t x, std::size_t y) {
    const auto i = x % m, j = x / m, k = y % m, l = y / m;
    const auto twisted = j == 0 ? k : (k * t) % m;
    return (i + twisted) % m + m * ((j + l) % 2);
  };
  return tabulate(order, mul, two_generator_labels(m, 2, "a", "b"));
}

FiniteGroup heisenberg(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::InvalidArgument, "heisenberg group needs an odd prime");
  const auto n = p * p * p;
  if (n > kMaxFamilyOrder) throw Error(Errc::TooLarge, "heisenberg group too large");
  // [[1,x,z],[0,1,y],[0,0,1]] at index x + p*y + p^2*z.
  auto mul = [p](std::size_t u, std::size_t v) {
    const auto x1 = u % p, y1 = (u / p) % p, z1 = u / (p * p);
    const auto x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
    const auto x = (x1 + x2) % p, y = (y1 + y2) % p, z = (z1 + z2 + x1 * y2) % p;
    return x + p * y + p * p * z;
  };
  std::vector<std::string> labels(n);
  for (std::size_t u = 0; u < n; ++u)
    labels[u] = u == 0 ? "e"
                       : "[" + std::to_string(u % p) + "," + std::to_string((u / p) % p) + "," +
                             std::to_string(u / (p * p)) + "]";
  return tabulate(n, mul, std::move(labels));
}

namespace {

std::size_t spec_number(std::string_view spec, std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(Errc::InvalidArgument, "bad number '" + std::string(text) + "' in '" + std::string(spec) + "'");
  return value;
}

FiniteGroup factor_from_spec(std::string_view factor) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto colon = factor.find(':', start);
    parts.push_back(factor.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto name = parts.front();
  auto arg = [&](std::size_t i) { return spec_number(factor, parts[i]); };
  const auto arity = parts.size() - 1;
  if (name == "elem" && arity == 2) return elementary_abelian(arg(1), arg(2));
  if (arity == 1) {
    if (name == "cyclic") return cyclic(arg(1));
    if (name == "dihedral") return dihedral(arg(1));
    if (name == "quaternion") return generalized_quaternion(arg(1));
    if (name == "M") return modular_M(arg(1));
    if (name == "heisenberg") return heisenberg(arg(1));
  }
  throw Error(Errc::InvalidArgument, "unknown family spec '" + std::string(factor) + "'");
}

}  // namespace

FiniteGroup from_spec(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty() || tokens.size() % 2 == 0)
    throw Error(Errc::InvalidArgument, "malformed family spec '" + std::string(spec) + "'");
  auto g = factor_from_spec(tokens[0]);
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    if (tokens[i] != "x") throw Error(Errc::InvalidArgument, "expected 'x' in '" + std::string(spec) + "'");
    g = direct_product(g, factor_from_spec(tokens[i + 1]));
  }
  return g;
}

}  // namespace noncent::families
