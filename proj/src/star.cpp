#include "mvgamma/star.hpp"

#include <algorithm>

#include "mvgamma/errors.hpp"
#include "mvgamma/good_sequence.hpp"

namespace mvg {

ChangChainGroup star_chain(const FiniteMVAlgebra& chain) {
  if (!chain.is_totally_ordered()) throw DomainError("star_chain needs a totally ordered algebra");
  return ChangChainGroup(chain);
}

ChangPair ChainStarMorphism::operator()(const ChangPair& x) const {
  if (!dom.is_normalized(x)) throw DomainError("pair is not a normalized element of the domain");
  return cod.normalize(x.m, map.at(static_cast<std::size_t>(x.a)));
}

ChainStarMorphism star_chain_morphism(const MVMorphism& h) {
  if (!check_morphism(h).ok()) throw DomainError("map is not an MV-morphism");
  return ChainStarMorphism{star_chain(h.dom), star_chain(h.cod), h.map};
}

std::optional<Elem> StarAlgebra::preimage(const GroupElement& x) const {
  auto it = lookup.find(x);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

namespace {

// ι must be a bijection onto A° that carries ⊕ and ¬ to the segment operations.
void verify_iota(const StarAlgebra& s) {
  const ProductLuGroup& g = s.ambient;
  const GroupElement& u = s.unit();
  const GroupElement zero = g.zero();
  const int n = s.source.size();
  if (s.lookup.size() != static_cast<std::size_t>(n)) throw InternalError("iota is not injective");
  if (!(s.iota(0) == zero)) throw InternalError("iota(0) is not 0");
  if (!(s.iota(s.source.top()) == u)) throw InternalError("iota(1) is not u");
  for (Elem a = 0; a < n; ++a) {
    const GroupElement& x = s.iota(a);
    if (!g.leq(zero, x) || !g.leq(x, u)) throw InternalError("iota leaves [0, u]");
    if (!(s.iota(s.source.neg(a)) == g.sub(u, x))) throw InternalError("iota does not carry negation to u - x");
    for (Elem b = 0; b < n; ++b)
      if (!(s.iota(s.source.oplus(a, b)) == g.meet(u, g.add(x, s.iota(b))))) throw InternalError("iota does not carry oplus to u ^ (x + y)");
  }
}

}  // namespace

StarAlgebra star_algebra(const FiniteMVAlgebra& alg) {
  CanonicalEmbedding emb = canonical_embedding(alg);
  std::vector<ChangChainGroup> fibers;
  GroupElement u;
  for (const QuotientResult& q : emb.quotients) {
    fibers.push_back(star_chain(q.quotient));
    u.coords.push_back(fibers.back().normalize(0, q.quotient.top()));
  }
  ProductLuGroup ambient(std::move(fibers), std::move(u));

  std::vector<GroupElement> image;
  std::map<GroupElement, Elem> lookup;
  for (Elem a = 0; a < alg.size(); ++a) {
    GroupElement x;
    for (std::size_t i = 0; i < emb.quotients.size(); ++i)
      x.coords.push_back(ambient.fiber(i).normalize(0, emb.quotients[i].class_of[static_cast<std::size_t>(a)]));
    lookup.emplace(x, a);
    image.push_back(std::move(x));
  }
  StarAlgebra s{alg, std::move(emb.spectrum), std::move(emb.quotients), std::move(ambient), std::move(image), std::move(lookup)};
  verify_iota(s);
  return s;
}

StarAlgebra star_of_subalgebra(const GammaSegment& seg, std::vector<Elem> members) {
  const FiniteMVAlgebra& big = seg.algebra;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw DomainError("subalgebra must contain 0");
  std::vector<Elem> local(static_cast<std::size_t>(big.size()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= big.size()) throw DomainError("subalgebra member outside the segment");
    local[static_cast<std::size_t>(members[i])] = static_cast<Elem>(i);
  }
  const std::size_t k = members.size();
  std::vector<std::vector<Elem>> oplus(k, std::vector<Elem>(k));
  std::vector<Elem> neg(k);
  for (std::size_t i = 0; i < k; ++i) {
    neg[i] = local[static_cast<std::size_t>(big.neg(members[i]))];
    if (neg[i] < 0) throw DomainError("subset is not closed under negation");
    for (std::size_t j = 0; j < k; ++j) {
      oplus[i][j] = local[static_cast<std::size_t>(big.oplus(members[i], members[j]))];
      if (oplus[i][j] < 0) throw DomainError("subset is not closed under oplus");
    }
  }
  FiniteMVAlgebra source(static_cast<int>(k), oplus, std::move(neg));
  std::vector<GroupElement> image;
  std::map<GroupElement, Elem> lookup;
  for (std::size_t i = 0; i < k; ++i) {
    image.push_back(seg.element_of(members[i]));
    lookup.emplace(image.back(), static_cast<Elem>(i));
  }
  StarAlgebra s{std::move(source), {}, {}, seg.group, std::move(image), std::move(lookup)};
  verify_iota(s);
  return s;
}

std::optional<MembershipWitness> star_membership(const StarAlgebra& s, const GroupElement& x) {
  const ProductLuGroup& g = s.ambient;
  const AbsDecomposition parts = abs_decompose(g, x);
  MembershipWitness w;
  GroupElement total = g.zero();
  for (const GroupElement& a : canonical_sequence_elements(g, parts.plus)) {
    auto idx = s.preimage(a);
    if (!idx) return std::nullopt;
    w.positive_part.push_back(*idx);
    total = g.add(total, a);
  }
  for (const GroupElement& a : canonical_sequence_elements(g, parts.minus)) {
    auto idx = s.preimage(a);
    if (!idx) return std::nullopt;
    w.negative_part.push_back(*idx);
    total = g.sub(total, a);
  }
  if (!(total == x)) throw InternalError("membership witness does not reconstruct x");
  w.reconstruction = std::move(total);
  return w;
}

GroupElement StarMorphism::operator()(const GroupElement& sigma) const {
  GroupElement out;
  out.coords.reserve(fiber_maps.size());
  for (std::size_t j = 0; j < fiber_maps.size(); ++j) out.coords.push_back(fiber_maps[j](sigma.coords.at(source_fiber[j])));
  return out;
}

StarMorphism star_morphism(const MVMorphism& h, const StarAlgebra& dom, const StarAlgebra& cod) {
  if (!dom.canonical() || !cod.canonical()) throw DomainError("star_morphism needs canonically built star algebras");
  if (!(h.dom == dom.source) || !(h.cod == cod.source)) throw DomainError("morphism does not match the star algebras");
  if (!check_morphism(h).ok()) throw DomainError("map is not an MV-morphism");
  StarMorphism out{{}, {}, cod.ambient};
  for (std::size_t j = 0; j < cod.spectrum.primes.size(); ++j) {
    RestrictedMorphism r = restrict_morphism(h, cod.spectrum.primes[j]);
    const auto& primes = dom.spectrum.primes;
    auto it = std::find(primes.begin(), primes.end(), r.preimage);
    if (it == primes.end()) throw InternalError("preimage prime missing from the domain spectrum");
    const auto src = static_cast<std::size_t>(it - primes.begin());
    if (!(r.dom_quotient.quotient == dom.quotients[src].quotient) || !(r.cod_quotient.quotient == cod.quotients[j].quotient))
      throw InternalError("restricted morphism disagrees with the stored quotients");
    out.source_fiber.push_back(src);
    out.fiber_maps.push_back(ChainStarMorphism{dom.ambient.fiber(src), cod.ambient.fiber(j), r.map.map});
  }
  return out;
}

}  // namespace mvg
