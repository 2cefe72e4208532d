#pragma once

#include <vector>

#include "mvgamma/lgroup.hpp"

namespace mvg {

/// A finite sequence in a segment algebra with a_k ⊕ a_{k+1} = a_k.
struct GoodSequence {
  std::vector<Elem> entries;  // carrier indices of the segment algebra
  friend bool operator==(const GoodSequence&, const GoodSequence&) = default;
};

/// a_k = ((x − k·u) ∧ u) ∨ 0 for k < unit_bound(x), trailing zeros removed,
/// as group elements. Throws DomainError unless x ≥ 0.
std::vector<GroupElement> canonical_sequence_elements(const ProductLuGroup& g, const GroupElement& x);

/// The canonical good sequence of x ≥ 0 over Γ(G, u). Sum and good law are
/// re-verified; a failure raises InternalError.
GoodSequence canonical_good_sequence(const GammaSegment& seg, const GroupElement& x);

/// The consecutive law a_k ⊕ a_{k+1} = a_k.
bool is_good_sequence(const FiniteMVAlgebra& segment, const std::vector<Elem>& entries);

/// Good and without trailing zeros.
bool is_normalized_good_sequence(const FiniteMVAlgebra& segment, const std::vector<Elem>& entries);

GroupElement good_sequence_sum(const GammaSegment& seg, const std::vector<Elem>& entries);

}  // namespace mvg
