#pragma once

#include <string>
#include <vector>

#include "hopfdouble/bicovariant.hpp"

namespace hopfdouble {

/// Finite group by its Cayley table: table[a][b] is the index of g_a g_b.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^{-1}
};

inline constexpr int kDefaultMaxOrder = 24;

/// Validates closure, associativity, identity and inverses; the error
/// message carries a witness. Labels default to "g0", "g1", ...
FiniteGroup group_from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                             int max_order = kDefaultMaxOrder);
/// Closure of permutations in cycle notation, e.g. "(12),(123)" or
/// "(1 10)(2 3)". Points are 1-based; a cycle written without spaces is read
/// one digit per point. Elements are ordered lexicographically by their
/// image lists, so the identity comes first. (gh)(x) = g(h(x)).
FiniteGroup group_from_generators(const std::string& generators, int max_order = kDefaultMaxOrder);
FiniteGroup cyclic_group(int n);

/// F(G) with basis delta_g.
HopfPtr function_hopf(const FiniteGroup& g);
/// kG with basis g, group-like coproduct.
HopfPtr group_algebra(const FiniteGroup& g);

struct ConjugacyClass {
  std::vector<int> members;  // sorted
  int representative = 0;    // smallest member
};

/// Classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// rho(delta_x) omega_g = [g = x] omega_g, rho(h) omega_g = omega_{h g h^{-1}},
/// with omega_g indexed by the sorted members of the class. The double must
/// be built on function_hopf(g).
DoubleRepresentation class_representation(const DoublePtr& d, const FiniteGroup& g, const ConjugacyClass& c);

}  // namespace hopfdouble
