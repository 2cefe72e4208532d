#pragma once

#include <vector>

#include <json.hpp>

#include "mvgamma/smith.hpp"
#include "mvgamma/star.hpp"

namespace mvg {

/// Free(|A|)/∼ against A*, both described by invariant factors.
///
/// The relation matrix has one row e_a + e_b − e_{a⊕b} − e_{a⊙b} per pair
/// a ≤ b of carrier indices, and a final row e_0 when the zero element is
/// identified with 0. `free_factors` lists the cokernel diagonal (units
/// included) followed by a 0 per free summand. A* is a subgroup of a
/// product of copies of Z, hence free: `star_factors` is one 0 per rank, and
/// `star_index_factors` gives the nonzero invariant factors of the generator
/// matrix of A° inside the linearized ambient.
struct SNFReport {
  bool identify_zero = true;
  std::size_t relation_rows = 0;
  std::size_t relation_cols = 0;
  std::vector<Int> free_factors;
  std::vector<Int> star_factors;
  std::vector<Int> star_index_factors;
  bool isomorphic = false;  // factor lists agree once units are dropped
};

IntMatrix relation_matrix(const FiniteMVAlgebra& alg, bool identify_zero);

SNFReport free_quotient_experiment(const StarAlgebra& star, bool identify_zero = true);
SNFReport free_quotient_experiment(const FiniteMVAlgebra& alg, bool identify_zero = true);

nlohmann::ordered_json snf_report_to_json(const SNFReport& r);

}  // namespace mvg
