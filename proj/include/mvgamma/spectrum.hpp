#pragma once

#include <vector>

#include "mvgamma/mv_core.hpp"

namespace mvg {

/// A subset of a finite carrier, stored as a membership mask.
///
/// Subsets are compared as binary numbers in which carrier index i carries
/// weight 2^i; this is the canonical order used for ideals and spectra.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<bool> mask) : mask_(std::move(mask)) {}
  static Ideal from_members(int carrier_size, const std::vector<Elem>& members);

  int carrier_size() const { return static_cast<int>(mask_.size()); }
  bool contains(Elem a) const { return mask_.at(static_cast<std::size_t>(a)); }
  std::vector<Elem> members() const;
  int count() const;
  const std::vector<bool>& mask() const { return mask_; }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend bool operator<(const Ideal& x, const Ideal& y);

 private:
  std::vector<bool> mask_;
};

struct Spectrum {
  std::vector<Ideal> primes;  // canonical order
};

struct QuotientResult {
  FiniteMVAlgebra quotient;
  MVMorphism projection;       // a ↦ [a]_P
  std::vector<Elem> class_of;  // same values as projection.map
};

/// True iff the subset contains 0, is downward closed and is closed under ⊕.
bool is_ideal(const FiniteMVAlgebra& alg, const Ideal& set);

/// Smallest ideal containing `seed`.
Ideal ideal_closure(const FiniteMVAlgebra& alg, const std::vector<Elem>& seed);

/// Ideal generated by a single element.
Ideal principal_ideal(const FiniteMVAlgebra& alg, Elem a);

/// Every ideal of the algebra (including {0} and the improper one), in
/// canonical order. Principal ideals are computed first and then closed under
/// pairwise joins until a fixpoint is reached.
std::vector<Ideal> enumerate_ideals(const FiniteMVAlgebra& alg);

/// Primality by the ⊖ criterion: for all a, b, a ⊖ b ∈ P or b ⊖ a ∈ P.
/// Throws DomainError if P is not a proper ideal.
bool is_prime_ideal(const FiniteMVAlgebra& alg, const Ideal& p);

/// All proper prime ideals in canonical order.
Spectrum spectrum(const FiniteMVAlgebra& alg);

/// A/P with classes a ~ b iff (a ⊖ b) ⊕ (b ⊖ a) ∈ P. When A/P is a chain its
/// classes are numbered bottom to top (so A/P is literally Ł_n); otherwise by
/// smallest representative. Throws DomainError if P is not a proper ideal.
QuotientResult quotient(const FiniteMVAlgebra& alg, const Ideal& p);

/// {a : h(a) = 0}
Ideal kernel(const MVMorphism& h);

/// {a : h(a) ∈ P}
Ideal preimage(const MVMorphism& h, const Ideal& p);

struct CanonicalEmbedding {
  Spectrum spectrum;
  std::vector<QuotientResult> quotients;  // one per prime, spectrum order
  MVMorphism embedding;                   // A → ∏ A/P
};

/// a ↦ ([a]_P)_{P ∈ Sp(A)} into the row-major product of the quotients.
CanonicalEmbedding canonical_embedding(const FiniteMVAlgebra& alg);

struct RestrictedMorphism {
  Ideal preimage;              // h⁻¹P, a prime of dom(h)
  QuotientResult dom_quotient; // dom(h) / h⁻¹P
  QuotientResult cod_quotient; // cod(h) / P
  MVMorphism map;              // [a]_{h⁻¹P} ↦ [h(a)]_P
};

/// The induced map dom/h⁻¹P → cod/P. Throws DomainError if P is not prime in
/// cod(h) and InternalError if the induced map is not well defined.
RestrictedMorphism restrict_morphism(const MVMorphism& h, const Ideal& p);

}  // namespace mvg
