#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mvgamma/lgroup.hpp"
#include "mvgamma/spectrum.hpp"

namespace mvg {

/// Chang's group of a finite chain. Throws DomainError on non-chains.
ChangChainGroup star_chain(const FiniteMVAlgebra& chain);

/// h*: (n, a) ↦ (n, h(a)) between the star groups of two chains.
struct ChainStarMorphism {
  ChangChainGroup dom;
  ChangChainGroup cod;
  std::vector<Elem> map;

  ChangPair operator()(const ChangPair& x) const;
};

/// Throws DomainError if h is not a morphism or either side is not a chain.
ChainStarMorphism star_chain_morphism(const MVMorphism& h);

/// A* as the subgroup generated by A° inside a product of chain groups.
///
/// For the canonical construction the ambient fibers are (A/P)* over Sp(A) in
/// canonical order and ι(a)(P) = (0, [a]_P). An explicit construction from a
/// subalgebra of a segment leaves `spectrum` and `quotients` empty.
struct StarAlgebra {
  FiniteMVAlgebra source;
  Spectrum spectrum;
  std::vector<QuotientResult> quotients;
  ProductLuGroup ambient;
  std::vector<GroupElement> a_circle;  // ι: source index → ambient element
  std::map<GroupElement, Elem> lookup;

  const GroupElement& unit() const { return ambient.unit(); }
  const GroupElement& iota(Elem a) const { return a_circle.at(static_cast<std::size_t>(a)); }
  std::optional<Elem> preimage(const GroupElement& x) const;
  bool canonical() const { return !spectrum.primes.empty(); }
};

/// Throws InternalError if ι fails to be an MV-isomorphism onto A° with the
/// segment operations x ⊕ y = u ∧ (x + y), ¬x = u − x.
StarAlgebra star_algebra(const FiniteMVAlgebra& alg);

/// A sub-MV-algebra of Γ(G, u) given by its carrier indices, generating a
/// subgroup of G. Throws DomainError if `members` is not a subalgebra.
StarAlgebra star_of_subalgebra(const GammaSegment& seg, std::vector<Elem> members);

/// x = Σ positive − Σ negative with both parts canonical good sequences of
/// x⁺ and x⁻ whose entries lie in A° (listed as source carrier indices).
struct MembershipWitness {
  std::vector<Elem> positive_part;
  std::vector<Elem> negative_part;
  GroupElement reconstruction;
};

/// Membership of x in A*; std::nullopt when x ∉ A*.
std::optional<MembershipWitness> star_membership(const StarAlgebra& s, const GroupElement& x);

/// h*(σ)(P) = (h|_P)*(σ(h⁻¹P)) on the ambient products.
struct StarMorphism {
  std::vector<std::size_t> source_fiber;  // per codomain fiber P: index of h⁻¹P in Sp(dom)
  std::vector<ChainStarMorphism> fiber_maps;
  ProductLuGroup cod_ambient;

  GroupElement operator()(const GroupElement& sigma) const;
};

/// Throws DomainError if h does not match the two star algebras and
/// InternalError if some h⁻¹P is missing from the domain spectrum.
StarMorphism star_morphism(const MVMorphism& h, const StarAlgebra& dom, const StarAlgebra& cod);

}  // namespace mvg
