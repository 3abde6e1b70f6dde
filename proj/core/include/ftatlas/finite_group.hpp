#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ftatlas {

using Element = std::size_t;

/// Finite group given by its Cayley table: mul(a, b) = table[a][b].
class FiniteGroup {
 public:
  /// Checks Latin-square rows and columns, a two-sided identity, and
  /// associativity (every triple up to order 128, 200000 seeded triples
  /// above). Throws kInvalidGroup.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::string name = "table");

  static FiniteGroup cyclic(std::size_t n);
  /// Order 2n: index k is r^k, index n + k is s r^k.
  static FiniteGroup dihedral(std::size_t n);
  /// Permutations of {0..k-1} for k <= 5 in lexicographic order, product
  /// (s t)(i) = s(t(i)); the identity is index 0.
  static FiniteGroup symmetric(std::size_t k);
  /// Upper unitriangular 3x3 matrices over Z/p, p in {2, 3}; (a, b, c) is
  /// index a p^2 + b p + c with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  static FiniteGroup heisenberg_mod(std::size_t p);

  std::size_t order() const noexcept { return table_.size(); }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element identity() const noexcept { return identity_; }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  bool is_abelian() const;

  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<Element>> conjugacy_classes() const;

 private:
  FiniteGroup(std::vector<std::vector<Element>> table, std::string name);
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string name_;
};

/// A subgroup with its own Cayley table; local index i is elements[i].
struct Subgroup {
  std::vector<Element> elements;
  FiniteGroup group;
  /// Local index of a parent element, or order() when absent.
  std::size_t local_index(Element parent) const;
};

/// Throws kNotASubgroup unless the (deduplicated, sorted) subset is closed
/// under the product and contains the identity.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> subset);

/// Group by family name: cyclic(n), dihedral(n), symmetric(n), heisenberg_mod(p).
/// Throws kUnknownName for unknown families and kInvalidGroup for parameters out of range.
FiniteGroup group_family(const std::string& family, std::size_t parameter);

}  // namespace ftatlas
