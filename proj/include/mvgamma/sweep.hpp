#pragma once

#include <string>
#include <vector>

#include "mvgamma/checks.hpp"
#include "mvgamma/free_quotient.hpp"

namespace mvg {

struct SweepConfig {
  int max_size = 12;  // carrier bound for generated algebras
  Int window = 4;     // B in {x : |x| ≤ B·u}
  std::size_t morphism_cap = 1'000'000;
  // representable groups for the υ, Theorem 1, generation and good-sequence suites
  int max_group_fibers = 3;
  int max_group_chain = 4;
  Int max_unit_height = 3;  // largest lin(u(i))
  // groups between which unital ℓ-maps are enumerated
  int lmap_group_fibers = 2;
  int lmap_group_chain = 3;
  Int lattice_window = 1;  // pairs for additivity and lattice checks of maps
  int chang_max_chain = 5;
  int free_quotient_max_size = 9;
};

/// (Ł_{n_1})* × ... × (Ł_{n_k})* for k ≤ max_fibers, n_i ≤ max_chain, with
/// every unit u(i) = delinearize(h_i), 1 ≤ h_i ≤ max_unit_height. Ordered
/// tuples, so fiber permutations appear separately.
std::vector<ProductLuGroup> representable_family(int max_fibers, int max_chain, Int max_unit_height);

/// Suites that concern a single algebra: axioms, spectrum, star round trip and
/// the free-quotient experiment, plus the chain suites for chains.
std::vector<CheckReport> algebra_suites(const FiniteMVAlgebra& alg, const SweepConfig& config);

/// Suites that concern a single representable group: υ, Theorem 1, segment
/// generation and good sequences.
std::vector<CheckReport> group_suites(const ProductLuGroup& g, const SweepConfig& config);

/// Every suite over the generated algebras, the morphisms between them, the
/// representable family and the unital ℓ-maps, merged per suite in a fixed order.
std::vector<CheckReport> run_sweep(const SweepConfig& config);

}  // namespace mvg
