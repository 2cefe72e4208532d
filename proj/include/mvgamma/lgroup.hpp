#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mvgamma/checked.hpp"
#include "mvgamma/mv_core.hpp"

namespace mvg {

/// Element (m, a) of Chang's group over a finite chain. Normalized pairs
/// never carry a = top, since (m, top) and (m+1, 0) name the same element.
struct ChangPair {
  Int m = 0;
  Elem a = 0;

  friend bool operator==(const ChangPair&, const ChangPair&) = default;
  // Structural order for use as a map key; not the group order.
  friend auto operator<=>(const ChangPair&, const ChangPair&) = default;
};

/// Chang's ℓ_u-chain A* over a finite MV-chain A, with unit (0, top) = (1, 0).
class ChangChainGroup {
 public:
  /// Throws DomainError if `chain` is not totally ordered.
  explicit ChangChainGroup(FiniteMVAlgebra chain);

  const FiniteMVAlgebra& chain() const { return chain_; }
  /// n such that the chain is isomorphic to Ł_n.
  int order() const { return chain_.size() - 1; }

  ChangPair zero() const { return {0, 0}; }
  ChangPair unit() const { return {1, 0}; }

  ChangPair normalize(Int m, Elem a) const;
  bool is_normalized(const ChangPair& x) const;

  /// Carry addition: (m+n, a⊕b) if a⊕b < top, else (m+n+1, a⊙b); normalized.
  ChangPair add(const ChangPair& x, const ChangPair& y) const;
  /// The same rule applied to arbitrary (possibly unnormalized) pairs, with no
  /// normalization of inputs or output.
  ChangPair add_raw(const ChangPair& x, const ChangPair& y) const;
  /// −(m, a) = (−m−1, ¬a), normalized.
  ChangPair neg(const ChangPair& x) const;
  ChangPair sub(const ChangPair& x, const ChangPair& y) const { return add(x, neg(y)); }

  /// Lexicographic: m first, then the chain order on a.
  std::strong_ordering compare(const ChangPair& x, const ChangPair& y) const;
  bool leq(const ChangPair& x, const ChangPair& y) const { return compare(x, y) != std::strong_ordering::greater; }
  ChangPair meet(const ChangPair& x, const ChangPair& y) const { return leq(x, y) ? x : y; }
  ChangPair join(const ChangPair& x, const ChangPair& y) const { return leq(x, y) ? y : x; }

  /// k·x by double-and-add over `add`.
  ChangPair scale(const ChangPair& x, Int k) const;

  /// Position of a in the chain (0 for bottom, order() for top).
  int height(Elem a) const { return height_.at(static_cast<std::size_t>(a)); }
  Elem at_height(int h) const { return by_height_.at(static_cast<std::size_t>(h)); }

  /// Order isomorphism onto Z: (m, a) ↦ m·order() + height(a).
  Int linearize(const ChangPair& x) const;
  ChangPair delinearize(Int v) const;

  friend bool operator==(const ChangChainGroup& x, const ChangChainGroup& y) { return x.chain_ == y.chain_; }

 private:
  void check(const ChangPair& x) const {
    if (x.a < 0 || x.a >= chain_.size()) [[unlikely]]
      out_of_range(x);
  }
  [[noreturn]] void out_of_range(const ChangPair& x) const;

  FiniteMVAlgebra chain_;
  std::vector<int> height_;
  std::vector<Elem> by_height_;
};

/// One normalized pair per fiber. Products have few fibers, so the
/// coordinates live inline.
struct GroupElement {
  using Coords = boost::container::small_vector<ChangPair, 4>;
  Coords coords;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return std::equal(x.coords.begin(), x.coords.end(), y.coords.begin(), y.coords.end());
  }
  // Structural order for use as a map key; not the group order.
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
    return std::lexicographical_compare_three_way(x.coords.begin(), x.coords.end(), y.coords.begin(), y.coords.end());
  }
};

/// Finite product of Chang chain groups with a unit that is strictly positive
/// in every fiber. All operations are pointwise.
class ProductLuGroup {
 public:
  /// Throws DomainError on an empty fiber list, a malformed unit, or a unit
  /// that is not strictly positive in some fiber.
  ProductLuGroup(std::vector<ChangChainGroup> fibers, GroupElement unit);

  const std::vector<ChangChainGroup>& fibers() const { return fibers_; }
  const ChangChainGroup& fiber(std::size_t i) const { return fibers_.at(i); }
  std::size_t fiber_count() const { return fibers_.size(); }
  const GroupElement& unit() const { return unit_; }

  /// Throws DomainError unless x has one normalized coordinate per fiber.
  void validate(const GroupElement& x) const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement meet(const GroupElement& x, const GroupElement& y) const;
  GroupElement join(const GroupElement& x, const GroupElement& y) const;
  GroupElement scale(const GroupElement& x, Int k) const;
  /// Product (pointwise) order.
  bool leq(const GroupElement& x, const GroupElement& y) const;

  std::vector<Int> linearize(const GroupElement& x) const;
  GroupElement delinearize(const std::vector<Int>& v) const;

  friend bool operator==(const ProductLuGroup&, const ProductLuGroup&) = default;

 private:
  std::vector<ChangChainGroup> fibers_;
  GroupElement unit_;
};

ProductLuGroup make_product_group(std::vector<ChangChainGroup> fibers, GroupElement unit);
/// Fiber i is (Ł_{orders[i]})*.
ProductLuGroup make_chain_product_group(const std::vector<int>& orders, const std::vector<ChangPair>& unit);

struct AbsDecomposition {
  GroupElement plus;   // 0 ∨ x
  GroupElement minus;  // 0 ∨ −x
  GroupElement abs;    // plus + minus
};

/// Throws InternalError if x = x⁺ − x⁻ or |x| = x⁺ + x⁻ fails to hold.
AbsDecomposition abs_decompose(const ProductLuGroup& g, const GroupElement& x);

/// Least n ≥ 0 with |x| ≤ n·u, found per fiber by repeated addition of u.
Int unit_bound(const ProductLuGroup& g, const GroupElement& x);

/// Γ(G, u) = [0, u] with x ⊕ y = u ∧ (x + y) and ¬x = u − x.
struct GammaSegment {
  ProductLuGroup group;
  FiniteMVAlgebra algebra;
  std::vector<GroupElement> elements;  // carrier index → group element

  const GroupElement& element_of(Elem k) const { return elements.at(static_cast<std::size_t>(k)); }
  std::optional<Elem> find(const GroupElement& x) const;
  /// Throws DomainError if x is outside [0, u].
  Elem index_of(const GroupElement& x) const;
};

GammaSegment gamma_segment(const ProductLuGroup& g);

/// An ℓ-ideal of a product of chain groups supported on a set of fibers:
/// its members are the x with x(i) = 0 for every restricted fiber i.
struct CoordinateIdeal {
  std::vector<bool> unrestricted;

  bool contains(const GroupElement& x) const;
  bool is_proper() const;
  friend bool operator==(const CoordinateIdeal&, const CoordinateIdeal&) = default;
};

/// Prime ℓ-ideals: the kernels of the single-fiber projections, in fiber order.
std::vector<CoordinateIdeal> group_spectrum(const ProductLuGroup& g);

/// Every coordinate ℓ-ideal, ordered by support bitmask (the improper one last).
std::vector<CoordinateIdeal> coordinate_ideals(const ProductLuGroup& g);

/// All x with |x| ≤ bound·u, in row-major order of linearized coordinates.
std::vector<GroupElement> window(const ProductLuGroup& g, Int bound);

/// The elements x ≥ 0 of window(g, bound).
std::vector<GroupElement> positive_window(const ProductLuGroup& g, Int bound);

}  // namespace mvg
