#pragma once

#include <vector>

#include "mvgamma/report.hpp"
#include "mvgamma/star.hpp"

namespace mvg {

/// (n_x, x − n_x·u) with n_x·u ≤ x < (n_x + 1)·u, the second component given
/// as a carrier index of the single-fiber segment Γ(G, u).
ChangPair upsilon_inverse_chain(const ChangChainGroup& g, const ChangPair& u, const ChangPair& x);

/// υ(m, a) = m·u + a for a single fiber, a given as a segment carrier index.
ChangPair upsilon_chain(const ChangChainGroup& g, const ChangPair& u, const ChangPair& pair);

/// υ: Γ(G, u)* → G for a representable (G, u).
///
/// The star ambient has one fiber per prime of Γ(G, u); each is matched to the
/// fiber i of G whose kernel P_i satisfies P_i ∩ [0, u] = that prime, and the
/// class [x] of the quotient is sent to x(i) ∈ [0, u(i)].
class Upsilon {
 public:
  /// Throws InternalError if the primes of the segment cannot be aligned with
  /// the fibers of G, or a quotient class has no well-defined fiber value.
  explicit Upsilon(const ProductLuGroup& g);

  const ProductLuGroup& group() const { return segment_.group; }
  const GammaSegment& segment() const { return segment_; }
  const StarAlgebra& star() const { return star_; }
  /// star fiber j → fiber of G
  const std::vector<std::size_t>& alignment() const { return alignment_; }

  GroupElement apply(const GroupElement& sigma) const;
  GroupElement inverse(const GroupElement& x) const;

 private:
  GammaSegment segment_;
  StarAlgebra star_;
  std::vector<std::size_t> alignment_;
  std::vector<std::size_t> fiber_to_star_;
  std::vector<std::vector<ChangPair>> class_value_;  // [j][class] → element of G's fiber
  std::vector<std::vector<Elem>> class_of_height_;   // [j][linear value in [0, u)] → class
};

/// υ ι x = x on the segment, injectivity on A° differences, and the
/// bijection between members of the star window and window(G, bound).
CheckReport verify_upsilon(const Upsilon& ups, Int bound);

}  // namespace mvg
