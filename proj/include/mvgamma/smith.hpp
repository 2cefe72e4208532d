#pragma once

#include <cstddef>
#include <vector>

#include "mvgamma/checked.hpp"

namespace mvg {

using IntMatrix = std::vector<std::vector<Int>>;

/// U · M · V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... | d_{rank-1}.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  IntMatrix left;      // U, rows × rows
  IntMatrix diagonal;  // D, rows × cols
  IntMatrix right;     // V, cols × cols
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries, all positive

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Exact elimination over 64-bit integers; throws OverflowError on overflow.
/// `cols` fixes the width when `m` has no rows.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols);

/// Invariant factors of Z^cols / rowspace(M): the diagonal entries (units
/// included) followed by one 0 per free summand.
std::vector<Int> cokernel_factors(const SmithForm& snf);

/// Whether x lies in the row lattice { y·M : y ∈ Z^rows }.
bool row_lattice_contains(const SmithForm& snf, const std::vector<Int>& x);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols);

}  // namespace mvg
