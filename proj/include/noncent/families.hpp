#pragma once

#include <cstdint>
#include <string_view>

#include "noncent/group.hpp"

namespace noncent::families {

inline constexpr std::size_t kMaxFamilyOrder = 10000;

FiniteGroup cyclic(std::size_t n);
FiniteGroup elementary_abelian(std::uint64_t p, std::size_t k);

/// Dihedral group of order 2m: <r, s | r^m, s^2, s r s = r^-1>.
FiniteGroup dihedral(std::size_t m);

/// Generalized quaternion group of the given order (a power of two, >= 8):
/// <a, b | a^(n/2), b^2 = a^(n/4), b a b^-1 = a^-1>.
FiniteGroup generalized_quaternion(std::size_t order);

/// Modular group M(n) of order n = 2^k, k >= 3:
/// <a, b | a^(n/2), b^2, b a b = a^(n/4 + 1)>.
FiniteGroup modular_M(std::size_t order);

/// Upper unitriangular 3x3 matrices over Z/p, p an odd prime.
FiniteGroup heisenberg(std::uint64_t p);

}  // namespace noncent::families

namespace noncent::families {

/// Builds a group from a spec such as `dihedral:4`, `quaternion:8`, `M:16`,
/// `cyclic:6`, `elem:2:3`, `heisenberg:3`, or a product of these joined by
/// ` x ` (`dihedral:4 x cyclic:3`). Throws Errc::InvalidArgument.
FiniteGroup from_spec(std::string_view spec);

}  // namespace noncent::families
