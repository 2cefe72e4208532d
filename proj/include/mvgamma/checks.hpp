#pragma once

#include <vector>

#include "mvgamma/report.hpp"
#include "mvgamma/star.hpp"
#include "mvgamma/upsilon.hpp"

namespace mvg {

// ---- MV side -------------------------------------------------------------

/// The six axioms plus the lattice laws of the derived order: leq is a partial
/// order, ∨ and ∧ are its least upper and greatest lower bounds.
CheckReport axiom_check(const FiniteMVAlgebra& alg);

/// Ideal invariants of every enumerated ideal, primality against chain
/// quotients, kernel(ρ) = P, and the canonical embedding being subdirect.
CheckReport spectrum_check(const FiniteMVAlgebra& alg);

/// ι is an MV-isomorphism onto A° and A° = {x ∈ [0, u] : x ∈ A*}.
CheckReport star_roundtrip_check(const FiniteMVAlgebra& alg);

// ---- Chang chain groups --------------------------------------------------

/// Abelian ℓ-group laws, lexicographic total order, translation invariance,
/// positive/negative parts, normalization soundness and the strong-unit
/// property on the window {(m, a) : |m| ≤ bound}.
CheckReport chain_group_check(const ChangChainGroup& g, Int bound);

/// Γ((C)*, (1, 0)) ≅ C through (0, a) ↔ a, and the chain υ and its inverse
/// compose to the identity for every unit u with lin(u) ≤ 3·order.
CheckReport chain_roundtrip_check(const FiniteMVAlgebra& chain, Int bound);

// ---- Morphisms -----------------------------------------------------------

/// A unital ℓ-homomorphism between products of chain groups. Read through the
/// linearizations it is x ↦ (c_j · x_{s(j)})_j.
struct UnitalLMap {
  ProductLuGroup dom;
  ProductLuGroup cod;
  std::vector<std::size_t> source_fiber;  // s(j)
  std::vector<Int> multiplier;            // c_j ≥ 1

  GroupElement operator()(const GroupElement& x) const;
};

/// Every unital ℓ-map G → H: one source fiber per target fiber with
/// lin(u_H(j)) divisible by lin(u_G(s(j))).
std::vector<UnitalLMap> enumerate_unital_lmaps(const ProductLuGroup& g, const ProductLuGroup& h);

/// Γφ: Γ(G, u) → Γ(H, v) between the two segment algebras.
/// Throws DomainError if φ does not map [0, u] into [0, v].
MVMorphism gamma_of(const UnitalLMap& phi, const GammaSegment& gs, const GammaSegment& hs);

/// Additivity, lattice preservation and unitality on window(dom, bound).
CheckReport lmap_check(const UnitalLMap& phi, Int bound);

/// h* between chain groups: unit, sums, order and (n, a) ↦ (n, h(a)).
CheckReport chain_star_morphism_check(const MVMorphism& h, Int bound);

/// The ι-square h*(ι a) = ι h(a), and h* being a unital ℓ-morphism on
/// pairs from window(A*, bound).
CheckReport iota_naturality_check(const MVMorphism& h, const StarAlgebra& dom, const StarAlgebra& cod, Int bound);

/// The υ-square φ υ_G = υ_H (Γφ)* on the members of the star window.
CheckReport upsilon_naturality_check(const UnitalLMap& phi, const Upsilon& g, const Upsilon& h, Int bound);

/// (h2 h1)* = h2* h1* on window(A*, bound), where h1: A → B, h2: B → C.
CheckReport functoriality_check(const MVMorphism& h1, const MVMorphism& h2, const StarAlgebra& a, const StarAlgebra& b,
                                const StarAlgebra& c, Int bound);

/// ι-square and ℓ-morphism checks for h, the chain check when both sides are
/// chains, and functoriality against the identities of dom and cod.
CheckReport naturality_and_functoriality_check(const MVMorphism& h, Int bound);

/// ℓ-map checks for φ and its υ-square.
CheckReport naturality_and_functoriality_check(const UnitalLMap& phi, Int bound);

// ---- Representable groups ------------------------------------------------

/// For a proper coordinate ℓ-ideal J: J ∩ [0, u] is an ideal of the segment
/// and [x] ↦ [x]_J is a well-defined MV-isomorphism onto Γ(G/J, u_J).
/// Throws DomainError if J is improper or has the wrong fiber count.
CheckReport theorem1_checks(const GammaSegment& seg, const CoordinateIdeal& j);

/// Every proper coordinate ℓ-ideal, plus the bijection P ↦ P ∩ [0, u] from
/// group_spectrum(G) onto the spectrum of the segment.
CheckReport theorem1_checks(const GammaSegment& seg);

/// Every x in window(G, bound) satisfies |x| ≤ bound·u and lies in the
/// subgroup generated by [0, u].
CheckReport segment_generation_check(const GammaSegment& seg, Int bound);

/// Canonical good sequences of the positive window: good law, no trailing
/// zeros, exact sums, and distinct x giving distinct sequences; every
/// normalized good sequence found this way maps back to its own sum.
CheckReport good_sequence_check(const GammaSegment& seg, Int bound);

}  // namespace mvg
