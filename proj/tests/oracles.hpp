#pragma once

// Independent reference implementations used only by the tests. None of them
// calls the derived operations, ideal machinery or Smith elimination of the
// library; they work from the raw ⊕/¬ tables or from plain integers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "mvgamma/free_quotient.hpp"
#include "mvgamma/lgroup.hpp"

namespace oracle {

using mvg::Elem;
using mvg::FiniteMVAlgebra;
using mvg::Int;

// a ≤ b iff ¬a ⊕ b = 1
inline bool leq(const FiniteMVAlgebra& alg, Elem a, Elem b) { return alg.oplus(alg.neg(a), b) == alg.top(); }

// The greatest lower bound, found by scanning the order.
inline Elem glb(const FiniteMVAlgebra& alg, Elem a, Elem b) {
  for (Elem c = 0; c < alg.size(); ++c) {
    if (!leq(alg, c, a) || !leq(alg, c, b)) continue;
    bool greatest = true;
    for (Elem d = 0; d < alg.size() && greatest; ++d)
      if (leq(alg, d, a) && leq(alg, d, b) && !leq(alg, d, c)) greatest = false;
    if (greatest) return c;
  }
  return -1;
}

inline bool is_ideal_mask(const FiniteMVAlgebra& alg, std::uint32_t mask) {
  const auto in = [&](Elem a) { return (mask >> a) & 1u; };
  if (!in(0)) return false;
  for (Elem a = 0; a < alg.size(); ++a) {
    if (!in(a)) continue;
    for (Elem b = 0; b < alg.size(); ++b) {
      if (leq(alg, b, a) && !in(b)) return false;
      if (in(b) && !in(alg.oplus(a, b))) return false;
    }
  }
  return true;
}

// Every ideal, as a bitmask with carrier index i at bit i, in increasing order.
inline std::vector<std::uint32_t> ideals_by_subsets(const FiniteMVAlgebra& alg) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << alg.size();
  for (std::uint32_t mask = 1; mask < limit; mask += 2)
    if (is_ideal_mask(alg, mask)) out.push_back(mask);
  return out;
}

// Proper, and a ∧ b ∈ P forces a ∈ P or b ∈ P.
inline bool is_prime_by_meets(const FiniteMVAlgebra& alg, std::uint32_t mask) {
  const auto in = [&](Elem a) { return (mask >> a) & 1u; };
  if (in(alg.top())) return false;
  for (Elem a = 0; a < alg.size(); ++a)
    for (Elem b = 0; b < alg.size(); ++b)
      if (in(glb(alg, a, b)) && !in(a) && !in(b)) return false;
  return true;
}

template <class Ideal>
std::uint32_t mask_of(const Ideal& ideal) {
  std::uint32_t m = 0;
  for (Elem a : ideal.members()) m |= 1u << a;
  return m;
}

// Ł_n* read as Z: (m, a) ↦ m·n + a, valid because make_chain numbers its carrier by height.
inline Int chain_value(int n, const mvg::ChangPair& x) { return x.m * n + x.a; }

inline mvg::ChangPair chain_pair(int n, Int v) {
  Int m = v / n;
  if (v % n != 0 && v < 0) --m;
  return {m, static_cast<Elem>(v - m * n)};
}

// Bijection-by-permutation test for small carriers. Zero is fixed.
inline bool isomorphic_by_permutation(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x) {
      if (perm[static_cast<std::size_t>(a.neg(x))] != b.neg(perm[static_cast<std::size_t>(x)])) ok = false;
      for (Elem y = 0; y < a.size() && ok; ++y)
        if (perm[static_cast<std::size_t>(a.oplus(x, y))] != b.oplus(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]))
          ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Every map dom → cod preserving 0, ¬ and ⊕, found by trying all |cod|^|dom| maps.
inline std::vector<std::vector<Elem>> morphisms_by_brute_force(const FiniteMVAlgebra& dom, const FiniteMVAlgebra& cod) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(static_cast<std::size_t>(dom.size()), 0);
  while (true) {
    bool ok = map[0] == 0;
    for (Elem x = 0; x < dom.size() && ok; ++x) {
      const Elem hx = map[static_cast<std::size_t>(x)];
      if (map[static_cast<std::size_t>(dom.neg(x))] != cod.neg(hx)) ok = false;
      for (Elem y = 0; y < dom.size() && ok; ++y)
        if (map[static_cast<std::size_t>(dom.oplus(x, y))] != cod.oplus(hx, map[static_cast<std::size_t>(y)])) ok = false;
    }
    if (ok) out.push_back(map);
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == cod.size()) map[i++] = 0;
    if (i == map.size()) break;
  }
  return out;
}

// Normalized good sequences (nonzero entries, a_k ⊕ a_{k+1} = a_k) of length
// at most max_length whose sums stay below limit, grouped by their sum.
inline std::map<mvg::GroupElement, std::vector<std::vector<Elem>>> good_sequences_by_sum(const mvg::GammaSegment& seg,
                                                                                          std::size_t max_length,
                                                                                          const mvg::GroupElement& limit) {
  std::map<mvg::GroupElement, std::vector<std::vector<Elem>>> out;
  const mvg::ProductLuGroup& g = seg.group;
  std::vector<Elem> seq;
  const auto extend = [&](const auto& self, const mvg::GroupElement& sum) -> void {
    if (!seq.empty()) out[sum].push_back(seq);
    if (seq.size() == max_length) return;
    for (Elem b = 1; b < seg.algebra.size(); ++b) {
      if (!seq.empty() && seg.algebra.oplus(seq.back(), b) != seq.back()) continue;
      const mvg::GroupElement next = g.add(sum, seg.element_of(b));
      if (!g.leq(next, limit)) continue;
      seq.push_back(b);
      self(self, next);
      seq.pop_back();
    }
  };
  extend(extend, g.zero());
  return out;
}

// ---- integer matrices --------------------------------------------------------

using Matrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) determinant in 128-bit arithmetic.
inline __int128 determinant(Matrix m) {
  const std::size_t n = m.size();
  std::vector<std::vector<__int128>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(m[i].begin(), m[i].end());
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline Int gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return static_cast<Int>(a);
}

// Invariant factors d_k / d_{k-1} from the determinantal divisors d_k (gcd of
// all k×k minors), stopping at the rank. Exponential: small matrices only.
inline std::vector<Int> invariant_factors_by_minors(const Matrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Int> out;
  Int previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int d = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.end() - static_cast<std::ptrdiff_t>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<std::ptrdiff_t>(k), csel.end(), true);
      do {
        Matrix minor;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          minor.emplace_back();
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) minor.back().push_back(m[i][j]);
        }
        d = gcd128(d, determinant(minor));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (d == 0) break;
    out.push_back(d / previous);
    previous = d;
  }
  return out;
}

inline Matrix product(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols) {
  Matrix out(a.size(), std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Certifies Z^cols / rowspace(M) ≅ Z^cols / rowspace(D) without trusting U:
// U·M·V = D, every row of M·V lies in the row lattice of the diagonal D, and
// det V = ±1.
inline bool certifies_cokernel(const Matrix& m, std::size_t cols, const mvg::SmithForm& snf) {
  const std::size_t rows = m.size();
  if (product(product(snf.left, m, rows, cols), snf.right, cols, cols) != snf.diagonal) return false;
  const Matrix mv = product(m, snf.right, cols, cols);
  for (const auto& row : mv)
    for (std::size_t j = 0; j < cols; ++j) {
      const Int d = j < rows ? snf.diagonal[j][j] : 0;
      if (d == 0 ? row[j] != 0 : row[j] % d != 0) return false;
    }
  const __int128 det = determinant(snf.right);
  return det == 1 || det == -1;
}

}  // namespace oracle
