#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace feq {

/// An element of Z^r + Z_{n1} + ... + Z_{nk}, stored as a dense coordinate
/// vector. Free coordinates come first. Torsion coordinates are kept reduced
/// to [0, n_j), so structural equality is group equality.
struct GroupElement {
  std::vector<std::int64_t> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  GroupElement(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& x);

/// Residues of an element modulo 2G: one bit per free coordinate, one per
/// even torsion order. Odd orders contribute nothing since 2Z_n = Z_n.
struct CosetIndex2G {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const CosetIndex2G&, const CosetIndex2G&) = default;
  friend auto operator<=>(const CosetIndex2G&, const CosetIndex2G&) = default;
};

std::string to_string(const CosetIndex2G& c);

/// Finitely generated abelian group Z^free_rank + Z_{n1} + ... + Z_{nk}.
class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(int free_rank, std::vector<std::int64_t> torsion_orders);

  static GroupSpec cyclic(std::int64_t n) { return GroupSpec(0, {n}); }
  static GroupSpec integers(int rank = 1) { return GroupSpec(rank, {}); }
  static GroupSpec trivial() { return GroupSpec(0, {}); }

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_; }
  std::size_t dimension() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  bool is_finite() const { return free_rank_ == 0; }

  /// Number of elements; throws UnsupportedDomainError for infinite groups.
  std::uint64_t order() const;

  /// Number of bits in a CosetIndex2G for this group.
  std::size_t coset_bit_count() const;

  /// Builds an element, reducing torsion coordinates.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;

  /// Throws StructuralError if x has the wrong dimension or unreduced torsion coordinates.
  void require_conforms(const GroupElement& x) const;
  bool conforms(const GroupElement& x) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

std::string to_string(const GroupSpec& g);

GroupElement add(const GroupSpec& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupSpec& g, const GroupElement& x);
GroupElement sub(const GroupSpec& g, const GroupElement& x, const GroupElement& y);
GroupElement twice(const GroupSpec& g, const GroupElement& x);

/// All elements of a finite group in lexicographic order.
std::vector<GroupElement> enumerate_elements(const GroupSpec& g);

/// Row-major position of x in enumerate_elements(g).
std::size_t linear_index(const GroupSpec& g, const GroupElement& x);

CosetIndex2G coset_2g(const GroupSpec& g, const GroupElement& x);

/// All cosets of 2G, in lexicographic bit order. There are 2^coset_bit_count().
std::vector<CosetIndex2G> enumerate_cosets_2g(const GroupSpec& g);

/// Coset of x - y, computed from coset bits alone (G/2G is elementary abelian).
CosetIndex2G coset_difference(const CosetIndex2G& a, const CosetIndex2G& b);

}  // namespace feq
