#include "mvgamma/good_sequence.hpp"

#include "mvgamma/errors.hpp"

namespace mvg {

std::vector<GroupElement> canonical_sequence_elements(const ProductLuGroup& g, const GroupElement& x) {
  g.validate(x);
  const GroupElement zero = g.zero();
  if (!g.leq(zero, x)) throw DomainError("canonical good sequences need x >= 0");
  const Int n = unit_bound(g, x);
  const GroupElement& u = g.unit();
  std::vector<GroupElement> seq;
  GroupElement shifted = x;  // x − k·u
  for (Int k = 0; k < n; ++k) {
    seq.push_back(g.join(g.meet(shifted, u), zero));
    shifted = g.sub(shifted, u);
  }
  while (!seq.empty() && seq.back() == zero) seq.pop_back();
  return seq;
}

GoodSequence canonical_good_sequence(const GammaSegment& seg, const GroupElement& x) {
  GoodSequence out;
  GroupElement total = seg.group.zero();
  for (const GroupElement& a : canonical_sequence_elements(seg.group, x)) {
    out.entries.push_back(seg.index_of(a));
    total = seg.group.add(total, a);
  }
  if (!(total == x)) throw InternalError("canonical good sequence does not sum to x");
  if (!is_normalized_good_sequence(seg.algebra, out.entries)) throw InternalError("canonical sequence violates the good law");
  return out;
}

bool is_good_sequence(const FiniteMVAlgebra& segment, const std::vector<Elem>& entries) {
  for (Elem a : entries)
    if (a < 0 || a >= segment.size()) return false;
  for (std::size_t k = 0; k + 1 < entries.size(); ++k)
    if (segment.oplus(entries[k], entries[k + 1]) != entries[k]) return false;
  return true;
}

bool is_normalized_good_sequence(const FiniteMVAlgebra& segment, const std::vector<Elem>& entries) {
  return is_good_sequence(segment, entries) && (entries.empty() || entries.back() != segment.zero());
}

GroupElement good_sequence_sum(const GammaSegment& seg, const std::vector<Elem>& entries) {
  GroupElement total = seg.group.zero();
  for (Elem a : entries) total = seg.group.add(total, seg.element_of(a));
  return total;
}

}  // namespace mvg
