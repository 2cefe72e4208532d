#include "mvgamma/upsilon.hpp"

#include <set>

#include "mvgamma/errors.hpp"
#include "mvgamma/json_io.hpp"

namespace mvg {

ChangPair upsilon_inverse_chain(const ChangChainGroup& g, const ChangPair& u, const ChangPair& x) {
  if (!g.is_normalized(u) || !g.is_normalized(x)) throw DomainError("pairs must be normalized elements of the chain group");
  if (!g.leq(g.zero(), u) || u == g.zero()) throw DomainError("unit must be strictly positive");
  ChangPair acc = g.zero();
  Int n = 0;
  if (g.leq(g.zero(), x)) {
    while (g.leq(g.add(acc, u), x)) {
      acc = g.add(acc, u);
      n = checked_add(n, 1);
    }
  } else {
    while (!g.leq(acc, x)) {
      acc = g.sub(acc, u);
      n = checked_sub(n, 1);
    }
  }
  return {n, static_cast<Elem>(g.linearize(g.sub(x, acc)))};
}

ChangPair upsilon_chain(const ChangChainGroup& g, const ChangPair& u, const ChangPair& pair) {
  const Int height = g.linearize(u);
  if (pair.a < 0 || pair.a > height) throw DomainError("segment index outside [0, u]");
  return g.add(g.scale(u, pair.m), g.delinearize(pair.a));
}

Upsilon::Upsilon(const ProductLuGroup& g) : segment_(gamma_segment(g)), star_(star_algebra(segment_.algebra)) {
  const std::size_t k = g.fiber_count();
  const std::size_t primes = star_.spectrum.primes.size();
  if (primes != k) throw InternalError("segment spectrum size differs from the number of fibers");
  const int n = segment_.algebra.size();

  fiber_to_star_.assign(k, primes);
  for (std::size_t j = 0; j < primes; ++j) {
    std::size_t match = k;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<bool> mask(static_cast<std::size_t>(n));
      for (Elem e = 0; e < n; ++e) mask[static_cast<std::size_t>(e)] = segment_.element_of(e).coords[i] == ChangPair{};
      if (Ideal(std::move(mask)) == star_.spectrum.primes[j]) {
        if (match != k) throw InternalError("two fibers restrict to the same segment prime");
        match = i;
      }
    }
    if (match == k || fiber_to_star_[match] != primes) throw InternalError("segment prime not aligned with a fiber of G");
    alignment_.push_back(match);
    fiber_to_star_[match] = j;
  }

  class_value_.resize(primes);
  class_of_height_.resize(primes);
  for (std::size_t j = 0; j < primes; ++j) {
    const std::size_t i = alignment_[j];
    const QuotientResult& q = star_.quotients[j];
    std::vector<std::optional<ChangPair>> value(static_cast<std::size_t>(q.quotient.size()));
    for (Elem e = 0; e < n; ++e) {
      auto& slot = value[static_cast<std::size_t>(q.class_of[static_cast<std::size_t>(e)])];
      const ChangPair& v = segment_.element_of(e).coords[i];
      if (slot && !(*slot == v)) throw InternalError("quotient class has no well-defined fiber value");
      slot = v;
    }
    const Int height = g.fiber(i).linearize(g.unit().coords[i]);
    if (static_cast<Int>(value.size()) != height + 1) throw InternalError("quotient size differs from the fiber segment");
    class_of_height_[j].assign(static_cast<std::size_t>(height + 1), -1);
    for (std::size_t c = 0; c < value.size(); ++c) {
      class_value_[j].push_back(*value[c]);
      class_of_height_[j][static_cast<std::size_t>(g.fiber(i).linearize(*value[c]))] = static_cast<Elem>(c);
    }
  }
}

GroupElement Upsilon::apply(const GroupElement& sigma) const {
  star_.ambient.validate(sigma);
  const ProductLuGroup& g = group();
  GroupElement x;
  for (std::size_t i = 0; i < g.fiber_count(); ++i) {
    const std::size_t j = fiber_to_star_[i];
    const ChangPair& p = sigma.coords[j];
    const ChangChainGroup& f = g.fiber(i);
    x.coords.push_back(f.add(f.scale(g.unit().coords[i], p.m), class_value_[j].at(static_cast<std::size_t>(p.a))));
  }
  return x;
}

GroupElement Upsilon::inverse(const GroupElement& x) const {
  const ProductLuGroup& g = group();
  g.validate(x);
  GroupElement sigma;
  for (std::size_t j = 0; j < alignment_.size(); ++j) {
    const std::size_t i = alignment_[j];
    const ChangPair p = upsilon_inverse_chain(g.fiber(i), g.unit().coords[i], x.coords[i]);
    const Elem c = class_of_height_[j].at(static_cast<std::size_t>(p.a));
    sigma.coords.push_back(star_.ambient.fiber(j).normalize(p.m, c));
  }
  return sigma;
}

CheckReport verify_upsilon(const Upsilon& ups, Int bound) {
  CheckReport r{"upsilon", 0, {}};
  const GammaSegment& seg = ups.segment();
  const StarAlgebra& star = ups.star();
  const ProductLuGroup& g = ups.group();
  const int n = seg.algebra.size();

  for (Elem e = 0; e < n; ++e)
    r.expect(ups.apply(star.iota(e)) == seg.element_of(e), "upsilon iota x = x", [&] { return element_to_json(seg.element_of(e)); });

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const GroupElement d = ups.apply(star.ambient.sub(star.iota(a), star.iota(b)));
      const bool additive = d == g.sub(seg.element_of(a), seg.element_of(b));
      const bool separates = (d == g.zero()) == (a == b);
      r.expect(additive && separates, "upsilon injective on differences of generators", [&] {
        return nlohmann::ordered_json{{"a", a}, {"b", b}, {"image", element_to_json(d)}};
      });
    }

  // Membership verdicts over the star window, indexed like window(star.ambient, bound).
  const ProductLuGroup& ambient = star.ambient;
  std::vector<Int> lo, span;
  for (std::size_t j = 0; j < ambient.fiber_count(); ++j) {
    const Int reach = checked_mul(bound, ambient.fiber(j).linearize(ambient.unit().coords[j]));
    lo.push_back(-reach);
    span.push_back(2 * reach + 1);
  }
  const auto slot = [&](const GroupElement& sigma) -> std::optional<std::size_t> {
    const std::vector<Int> lin = ambient.linearize(sigma);
    std::size_t k = 0;
    for (std::size_t j = 0; j < lin.size(); ++j) {
      const Int d = lin[j] - lo[j];
      if (d < 0 || d >= span[j]) return std::nullopt;
      k = k * static_cast<std::size_t>(span[j]) + static_cast<std::size_t>(d);
    }
    return k;
  };
  const std::vector<GroupElement> star_window = window(ambient, bound);
  std::vector<signed char> verdict(star_window.size(), -1);
  const auto is_member = [&](const GroupElement& sigma) {
    const auto k = slot(sigma);
    if (!k) return star_membership(star, sigma).has_value();
    if (verdict[*k] < 0) verdict[*k] = star_membership(star, sigma).has_value() ? 1 : 0;
    return verdict[*k] == 1;
  };

  const std::vector<GroupElement> target = window(g, bound);
  for (const GroupElement& x : target) {
    const GroupElement sigma = ups.inverse(x);
    r.expect(is_member(sigma) && ups.apply(sigma) == x, "upsilon surjective onto window", [&] { return element_to_json(x); });
  }

  const std::set<GroupElement> target_set(target.begin(), target.end());
  std::set<GroupElement> images;
  std::size_t members = 0;
  for (const GroupElement& sigma : star_window) {
    if (!is_member(sigma)) continue;
    ++members;
    const GroupElement x = ups.apply(sigma);
    const bool fresh = images.insert(x).second;
    r.expect(fresh && target_set.count(x) == 1, "upsilon injective from star window into window", [&] { return element_to_json(sigma); });
  }
  r.expect(members == target.size(), "star window members match window size", [&] {
    return nlohmann::ordered_json{{"members", members}, {"window", target.size()}};
  });
  return r;
}

}  // namespace mvg
