#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvg {

// Carrier element of a finite algebra: an index in 0..size-1.
using Elem = int;

/// A finite MV-algebra presented by its Cayley tables.
///
/// The carrier is always {0, ..., size-1} with zero at index 0 and
/// top = neg(0). Construction only validates table shapes; whether the
/// tables satisfy the MV axioms is decided by check_mv_axioms, so invalid
/// presentations can still be built and diagnosed. Derived operations are
/// tabulated once at construction from oplus and neg.
class FiniteMVAlgebra {
 public:
  /// Throws ShapeError if the table dimensions differ from `size`, an entry
  /// is out of range, or size < 2 (the one-element algebra is excluded).
  FiniteMVAlgebra(int size, const std::vector<std::vector<Elem>>& oplus, std::vector<Elem> neg);

  int size() const { return size_; }
  Elem zero() const { return 0; }
  Elem top() const { return neg_[0]; }

  Elem oplus(Elem a, Elem b) const { return oplus_[index(a, b)]; }
  Elem neg(Elem a) const {
    check(a);
    return neg_[static_cast<std::size_t>(a)];
  }
  // a ⊙ b = ¬(¬a ⊕ ¬b)
  Elem odot(Elem a, Elem b) const { return odot_[index(a, b)]; }
  // a ⊖ b = a ⊙ ¬b
  Elem ominus(Elem a, Elem b) const { return ominus_[index(a, b)]; }
  // a ∨ b = (a ⊖ b) ⊕ b
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  // a ∧ b = ¬(¬a ∨ ¬b)
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  // a ≤ b iff a ⊖ b = 0
  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }

  bool is_totally_ordered() const;

  /// Elements listed bottom to top. Throws DomainError unless the algebra is a chain.
  std::vector<Elem> chain_order() const;

  std::vector<std::vector<Elem>> oplus_table() const;
  const std::vector<Elem>& neg_table() const { return neg_; }

  friend bool operator==(const FiniteMVAlgebra& x, const FiniteMVAlgebra& y) {
    return x.size_ == y.size_ && x.oplus_ == y.oplus_ && x.neg_ == y.neg_;
  }

 private:
  void check(Elem a) const {
    if (a < 0 || a >= size_) [[unlikely]]
      out_of_range(a);
  }
  [[noreturn]] void out_of_range(Elem a) const;
  std::size_t index(Elem a, Elem b) const {
    check(a);
    check(b);
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  int size_;
  std::vector<Elem> oplus_;
  std::vector<Elem> neg_;
  std::vector<Elem> odot_;
  std::vector<Elem> ominus_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<std::uint8_t> leq_;
};

/// Łukasiewicz chain Ł_n on {0..n}: a ⊕ b = min(n, a+b), ¬a = n − a. Requires n ≥ 1.
FiniteMVAlgebra make_chain(int n);

/// Pointwise product; the pair (a, b) sits at index a·|B| + b.
FiniteMVAlgebra make_product(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

/// Left fold of make_product; index of (x_0, ..., x_{k-1}) is row-major.
FiniteMVAlgebra make_product(std::span<const FiniteMVAlgebra> factors);

/// Row-major mixed-radix helpers shared by every product construction.
std::size_t product_index(std::span<const int> radices, std::span<const int> digits);
std::vector<int> product_digits(std::span<const int> radices, std::size_t index);

enum class DerivedOp { odot, ominus, join, meet, leq };

/// Generic entry point for derived operations; leq yields 0 or 1.
Elem derived(const FiniteMVAlgebra& alg, DerivedOp op, Elem a, Elem b);

struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of associativity, commutativity, a⊕0=a, ¬¬a=a,
/// a⊕¬0=¬0 and ¬(¬a⊕b)⊕b = ¬(¬b⊕a)⊕a.
AxiomReport check_mv_axioms(const FiniteMVAlgebra& alg,
                            std::size_t max_violations = std::numeric_limits<std::size_t>::max());

/// A map between finite MV-algebras. The constructor validates shape only.
struct MVMorphism {
  MVMorphism(FiniteMVAlgebra dom, FiniteMVAlgebra cod, std::vector<Elem> map);

  Elem operator()(Elem a) const { return map.at(static_cast<std::size_t>(a)); }

  FiniteMVAlgebra dom;
  FiniteMVAlgebra cod;
  std::vector<Elem> map;

  friend bool operator==(const MVMorphism&, const MVMorphism&) = default;
};

struct MorphismReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive preservation check of 0, ¬ and ⊕.
MorphismReport check_morphism(const MVMorphism& h);

/// Returns `second ∘ first`. Throws DomainError if cod(first) != dom(second).
MVMorphism compose(const MVMorphism& first, const MVMorphism& second);

MVMorphism identity_morphism(const FiniteMVAlgebra& alg);

/// Projection of make_product(a, b) onto factor 0 (a) or 1 (b).
MVMorphism product_projection(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b, int which);

bool is_injective(const MVMorphism& h);
bool is_surjective(const MVMorphism& h);

struct MorphismSearch {
  std::vector<MVMorphism> found;
  std::size_t candidates = 0;
  bool capped = false;
};

/// All morphisms dom → cod by backtracking with constraint propagation.
/// `candidate_cap` bounds the number of branching choices examined.
MorphismSearch enumerate_morphisms(const FiniteMVAlgebra& dom, const FiniteMVAlgebra& cod,
                                   std::size_t candidate_cap = 1'000'000);

/// An MV-isomorphism a → b, if one exists.
std::optional<MVMorphism> find_isomorphism(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

struct NamedAlgebra {
  std::string name;
  FiniteMVAlgebra algebra;
};

/// Chains Ł1..Ł_{max_chain} of size ≤ max_size, closed under binary products
/// (in both factor orders) whose carrier stays ≤ max_size. Deterministic order:
/// by size, then by generation order.
std::vector<NamedAlgebra> generate_algebras(int max_size, int max_chain);

}  // namespace mvg
