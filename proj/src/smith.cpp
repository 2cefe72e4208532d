#include "mvgamma/smith.hpp"

#include <cstdlib>
#include <utility>

#include "mvgamma/errors.hpp"

namespace mvg {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int abs_checked(Int v) { return v < 0 ? checked_neg(v) : v; }

class Reducer {
 public:
  Reducer(const IntMatrix& m, std::size_t cols) : rows_(m.size()), cols_(cols) {
    d_ = m;
    for (const auto& row : d_)
      if (row.size() != cols_) throw ShapeError("ragged integer matrix");
    u_ = identity(rows_);
    v_ = identity(cols_);
  }

  SmithForm run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!settle_pivot(t)) break;
      if (d_[t][t] < 0) negate_row(t);
    }
    SmithForm out{rows_, cols_, std::move(u_), std::move(d_), std::move(v_), {}};
    for (std::size_t t = 0; t < limit; ++t)
      if (out.diagonal[t][t] != 0) out.invariant_factors.push_back(out.diagonal[t][t]);
    return out;
  }

 private:
  // Brings the smallest nonzero entry of the trailing block to (t, t) and
  // clears row and column t. Returns false when the trailing block is zero.
  bool settle_pivot(std::size_t t) {
    for (;;) {
      std::size_t pi = rows_, pj = cols_;
      Int best = 0;
      for (std::size_t i = t; i < rows_; ++i)
        for (std::size_t j = t; j < cols_; ++j)
          if (d_[i][j] != 0 && (best == 0 || abs_checked(d_[i][j]) < best)) {
            best = abs_checked(d_[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < rows_; ++i)
        if (d_[i][t] != 0) {
          add_row_multiple(i, t, checked_neg(d_[i][t] / d_[t][t]));
          residue |= d_[i][t] != 0;
        }
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (d_[t][j] != 0) {
          add_col_multiple(j, t, checked_neg(d_[t][j] / d_[t][t]));
          residue |= d_[t][j] != 0;
        }
      if (residue) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (d_[i][j] % d_[t][t] != 0) {
            add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    std::swap(u_[a], u_[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d_) std::swap(row[a], row[b]);
    for (auto& row : v_) std::swap(row[a], row[b]);
  }

  // row_dst += k · row_src
  void add_row_multiple(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t j = 0; j < cols_; ++j) d_[dst][j] = checked_add(d_[dst][j], checked_mul(k, d_[src][j]));
    for (std::size_t j = 0; j < rows_; ++j) u_[dst][j] = checked_add(u_[dst][j], checked_mul(k, u_[src][j]));
  }

  // col_dst += k · col_src
  void add_col_multiple(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t i = 0; i < rows_; ++i) d_[i][dst] = checked_add(d_[i][dst], checked_mul(k, d_[i][src]));
    for (std::size_t i = 0; i < cols_; ++i) v_[i][dst] = checked_add(v_[i][dst], checked_mul(k, v_[i][src]));
  }

  void negate_row(std::size_t t) {
    for (Int& x : d_[t]) x = checked_neg(x);
    for (Int& x : u_[t]) x = checked_neg(x);
  }

  std::size_t rows_;
  std::size_t cols_;
  IntMatrix d_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols) { return Reducer(m, cols).run(); }

std::vector<Int> cokernel_factors(const SmithForm& snf) {
  std::vector<Int> out = snf.invariant_factors;
  for (std::size_t i = snf.rank(); i < snf.cols; ++i) out.push_back(0);
  return out;
}

bool row_lattice_contains(const SmithForm& snf, const std::vector<Int>& x) {
  if (x.size() != snf.cols) throw ShapeError("vector length does not match lattice dimension");
  // x = y·M  ⇔  x·V = z·D for an integer z (U is unimodular).
  for (std::size_t j = 0; j < snf.cols; ++j) {
    Int xv = 0;
    for (std::size_t i = 0; i < snf.cols; ++i) xv = checked_add(xv, checked_mul(x[i], snf.right[i][j]));
    if (j < snf.rank()) {
      if (xv % snf.invariant_factors[j] != 0) return false;
    } else if (xv != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i].at(k) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b.at(k).at(j)));
    }
  return out;
}

}  // namespace mvg
