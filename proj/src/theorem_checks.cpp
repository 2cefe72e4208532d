#include "mvgamma/checks.hpp"

#include <set>

#include "mvgamma/errors.hpp"
#include "mvgamma/good_sequence.hpp"
#include "mvgamma/json_io.hpp"

namespace mvg {

namespace {

Ideal restrict_to_segment(const GammaSegment& seg, const CoordinateIdeal& j) {
  std::vector<bool> mask(static_cast<std::size_t>(seg.algebra.size()));
  for (Elem e = 0; e < seg.algebra.size(); ++e) mask[static_cast<std::size_t>(e)] = j.contains(seg.element_of(e));
  return Ideal(std::move(mask));
}

Json coordinate_ideal_json(const CoordinateIdeal& j) {
  Json free = Json::array();
  for (std::size_t i = 0; i < j.unrestricted.size(); ++i)
    if (j.unrestricted[i]) free.push_back(i);
  return Json{{"unrestricted_fibers", free}};
}

}  // namespace

CheckReport theorem1_checks(const GammaSegment& seg, const CoordinateIdeal& j) {
  const ProductLuGroup& g = seg.group;
  if (j.unrestricted.size() != g.fiber_count()) throw DomainError("ideal has the wrong number of fibers");
  if (!j.is_proper()) throw DomainError("theorem1_checks needs a proper ideal");
  CheckReport r{"theorem1", 0, {}};
  const auto context = [&] { return Json{{"group", group_to_json(g)}, {"ideal", coordinate_ideal_json(j)}}; };

  const Ideal cut = restrict_to_segment(seg, j);
  r.expect(is_ideal(seg.algebra, cut), "J meet [0, u] is an ideal of the segment", context);
  if (!r.ok()) return r;

  std::vector<ChangChainGroup> fibers;
  GroupElement unit;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g.fiber_count(); ++i)
    if (!j.unrestricted[i]) {
      kept.push_back(i);
      fibers.push_back(g.fiber(i));
      unit.coords.push_back(g.unit().coords[i]);
    }
  const GammaSegment target = gamma_segment(ProductLuGroup(std::move(fibers), std::move(unit)));

  const QuotientResult q = quotient(seg.algebra, cut);
  std::vector<Elem> map(static_cast<std::size_t>(q.quotient.size()), -1);
  bool well_defined = true;
  for (Elem e = 0; e < seg.algebra.size(); ++e) {
    GroupElement projected;
    for (std::size_t i : kept) projected.coords.push_back(seg.element_of(e).coords[i]);
    const Elem image = target.index_of(projected);
    Elem& slot = map[static_cast<std::size_t>(q.class_of[static_cast<std::size_t>(e)])];
    if (slot >= 0 && slot != image) well_defined = false;
    slot = image;
  }
  r.expect(well_defined, "[x] -> [x]_J is well defined", context);
  if (!well_defined) return r;
  const MVMorphism iso(q.quotient, target.algebra, std::move(map));
  r.expect(check_morphism(iso).ok(), "[x] -> [x]_J is an MV-morphism", context);
  r.expect(is_injective(iso) && is_surjective(iso), "[x] -> [x]_J is bijective", context);
  return r;
}

CheckReport theorem1_checks(const GammaSegment& seg) {
  CheckReport r{"theorem1", 0, {}};
  for (const CoordinateIdeal& j : coordinate_ideals(seg.group))
    if (j.is_proper()) r.absorb(theorem1_checks(seg, j));

  const Spectrum sp = spectrum(seg.algebra);
  const std::set<Ideal> primes(sp.primes.begin(), sp.primes.end());
  std::set<Ideal> images;
  const auto context = [&] { return group_to_json(seg.group); };
  for (const CoordinateIdeal& p : group_spectrum(seg.group)) {
    const Ideal cut = restrict_to_segment(seg, p);
    const auto witness = [&] { return Json{{"group", context()}, {"prime", coordinate_ideal_json(p)}}; };
    r.expect(primes.count(cut) == 1, "P meet [0, u] is a prime of the segment", witness);
    r.expect(images.insert(cut).second, "P -> P meet [0, u] is injective", witness);
  }
  r.expect(images == primes, "P -> P meet [0, u] is surjective", context);
  return r;
}

CheckReport segment_generation_check(const GammaSegment& seg, Int bound) {
  CheckReport r{"segment_generation", 0, {}};
  std::vector<Elem> all(static_cast<std::size_t>(seg.algebra.size()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  const StarAlgebra generated = star_of_subalgebra(seg, std::move(all));
  for (const GroupElement& x : window(seg.group, bound)) {
    const auto witness = [&] { return Json{{"group", group_to_json(seg.group)}, {"x", element_to_json(x)}}; };
    r.expect(unit_bound(seg.group, x) <= bound, "|x| <= n u", witness);
    r.expect(star_membership(generated, x).has_value(), "x lies in the subgroup generated by [0, u]", witness);
  }
  return r;
}

CheckReport good_sequence_check(const GammaSegment& seg, Int bound) {
  CheckReport r{"good_sequences", 0, {}};
  std::set<std::vector<Elem>> seen;
  for (const GroupElement& x : positive_window(seg.group, bound)) {
    const auto witness = [&] { return Json{{"group", group_to_json(seg.group)}, {"x", element_to_json(x)}}; };
    GoodSequence s;
    try {
      s = canonical_good_sequence(seg, x);
    } catch (const InternalError& e) {
      r.fail("canonical extraction", Json{{"witness", witness()}, {"error", e.what()}});
      continue;
    }
    r.expect(is_normalized_good_sequence(seg.algebra, s.entries), "canonical sequence is good and normalized", witness);
    r.expect(good_sequence_sum(seg, s.entries) == x, "canonical sequence sums to x", witness);
    r.expect(static_cast<Int>(s.entries.size()) <= unit_bound(seg.group, x), "length at most the unit bound", witness);
    r.expect(seen.insert(s.entries).second, "distinct elements give distinct sequences", witness);
    r.expect(canonical_good_sequence(seg, good_sequence_sum(seg, s.entries)) == s, "sequence -> sum -> sequence is the identity",
             witness);
  }
  return r;
}

}  // namespace mvg
