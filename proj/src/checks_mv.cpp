#include "mvgamma/checks.hpp"

#include "mvgamma/errors.hpp"
#include "mvgamma/json_io.hpp"

namespace mvg {

namespace {

Json pair_json(const ChangPair& p) { return Json{{"m", p.m}, {"a", p.a}}; }

Json elems_json(std::initializer_list<Elem> xs) { return Json(std::vector<Elem>(xs)); }

}  // namespace

CheckReport axiom_check(const FiniteMVAlgebra& alg) {
  CheckReport r{"mv_axioms", 0, {}};
  const AxiomReport axioms = check_mv_axioms(alg);
  ++r.cases;
  for (const AxiomViolation& v : axioms.violations)
    r.fail(v.axiom, Json{{"algebra", algebra_to_json(alg)}, {"witness", v.witness}});
  if (!axioms.ok()) return r;

  const int n = alg.size();
  for (Elem a = 0; a < n; ++a) {
    r.expect(alg.leq(a, a), "leq reflexive", [&] { return elems_json({a}); });
    for (Elem b = 0; b < n; ++b) {
      if (a != b) r.expect(!(alg.leq(a, b) && alg.leq(b, a)), "leq antisymmetric", [&] { return elems_json({a, b}); });
      const Elem j = alg.join(a, b);
      const Elem m = alg.meet(a, b);
      r.expect(alg.leq(a, j) && alg.leq(b, j), "join is an upper bound", [&] { return elems_json({a, b}); });
      r.expect(alg.leq(m, a) && alg.leq(m, b), "meet is a lower bound", [&] { return elems_json({a, b}); });
      for (Elem c = 0; c < n; ++c) {
        if (alg.leq(a, b) && alg.leq(b, c))
          r.expect(alg.leq(a, c), "leq transitive", [&] { return elems_json({a, b, c}); });
        if (alg.leq(a, c) && alg.leq(b, c)) r.expect(alg.leq(j, c), "join is least", [&] { return elems_json({a, b, c}); });
        if (alg.leq(c, a) && alg.leq(c, b)) r.expect(alg.leq(c, m), "meet is greatest", [&] { return elems_json({a, b, c}); });
      }
    }
  }
  return r;
}

CheckReport spectrum_check(const FiniteMVAlgebra& alg) {
  CheckReport r{"spectrum", 0, {}};
  const Elem top = alg.top();
  for (const Ideal& ideal : enumerate_ideals(alg)) {
    const auto witness = [&] { return Json{{"algebra", algebra_to_json(alg)}, {"ideal", ideal_to_json(ideal)}}; };
    r.expect(is_ideal(alg, ideal), "enumerated set is an ideal", witness);
    if (ideal.contains(top)) continue;
    const QuotientResult q = quotient(alg, ideal);
    r.expect(is_prime_ideal(alg, ideal) == q.quotient.is_totally_ordered(), "prime iff the quotient is a chain", witness);
    r.expect(check_morphism(q.projection).ok() && is_surjective(q.projection), "projection is a surjective morphism", witness);
    r.expect(kernel(q.projection) == ideal, "kernel of the projection is the ideal", witness);
  }

  const CanonicalEmbedding emb = canonical_embedding(alg);
  const auto witness = [&] { return algebra_to_json(alg); };
  r.expect(!emb.spectrum.primes.empty(), "spectrum is nonempty", witness);
  r.expect(check_morphism(emb.embedding).ok(), "embedding is a morphism", witness);
  r.expect(is_injective(emb.embedding), "embedding is injective", witness);
  for (const QuotientResult& q : emb.quotients)
    r.expect(is_surjective(q.projection) && q.quotient.is_totally_ordered(), "embedding components are onto chains", witness);
  return r;
}

CheckReport star_roundtrip_check(const FiniteMVAlgebra& alg) {
  CheckReport r{"star_roundtrip", 0, {}};
  const auto witness = [&] { return algebra_to_json(alg); };
  std::optional<StarAlgebra> star;
  try {
    star.emplace(star_algebra(alg));
  } catch (const InternalError& e) {
    r.fail("iota is an MV-isomorphism onto A°", Json{{"algebra", algebra_to_json(alg)}, {"error", e.what()}});
    return r;
  }
  const StarAlgebra& s = *star;
  const GammaSegment seg = gamma_segment(s.ambient);

  std::vector<Elem> image;
  for (Elem a = 0; a < alg.size(); ++a) image.push_back(seg.index_of(s.iota(a)));
  const MVMorphism iota(alg, seg.algebra, image);
  r.expect(check_morphism(iota).ok(), "iota is a morphism into the segment", witness);
  r.expect(is_injective(iota), "iota is injective", witness);

  std::size_t members = 0;
  for (Elem e = 0; e < seg.algebra.size(); ++e) {
    const GroupElement& x = seg.element_of(e);
    const bool member = star_membership(s, x).has_value();
    members += member ? 1 : 0;
    r.expect(member == s.preimage(x).has_value(), "A° is the member segment", [&] {
      return Json{{"algebra", algebra_to_json(alg)}, {"x", element_to_json(x)}, {"member", member}};
    });
  }
  r.expect(members == static_cast<std::size_t>(alg.size()), "member segment has |A| elements", witness);
  return r;
}

CheckReport chain_group_check(const ChangChainGroup& g, Int bound) {
  CheckReport r{"chang_group", 0, {}};
  const int n = g.order();
  std::vector<ChangPair> w;
  for (Int m = -bound; m <= bound; ++m)
    for (int h = 0; h < n; ++h) w.push_back({m, g.at_height(h)});
  const ChangPair zero = g.zero();

  const auto j1 = [](const ChangPair& x) { return Json::array({pair_json(x)}); };
  const auto j2 = [](const ChangPair& x, const ChangPair& y) { return Json::array({pair_json(x), pair_json(y)}); };
  const auto j3 = [](const ChangPair& x, const ChangPair& y, const ChangPair& z) {
    return Json::array({pair_json(x), pair_json(y), pair_json(z)});
  };

  for (const ChangPair& x : w) {
    const ChangPair nx = g.neg(x);
    r.expect(g.add(x, zero) == x, "identity", [&] { return j1(x); });
    r.expect(g.add(x, nx) == zero, "inverse", [&] { return j1(x); });
    r.expect(g.linearize(g.delinearize(g.linearize(x))) == g.linearize(x) && g.delinearize(g.linearize(x)) == x,
             "linearization is a bijection", [&] { return j1(x); });

    const ChangPair plus = g.join(x, zero);
    const ChangPair minus = g.join(nx, zero);
    r.expect(g.sub(plus, minus) == x, "x = x+ - x-", [&] { return j1(x); });
    r.expect(g.meet(plus, minus) == zero, "x+ meet x- = 0", [&] { return j1(x); });
    r.expect(g.add(plus, minus) == g.join(x, nx), "|x| = x+ + x-", [&] { return j1(x); });

    const ChangPair unnormalized{x.m - 1, g.chain().top()};
    if (x.a == 0) r.expect(g.normalize(unnormalized.m, unnormalized.a) == x, "normalization identifies (m, top) with (m+1, 0)", [&] { return j1(x); });

    for (const ChangPair& y : w) {
      const ChangPair s = g.add(x, y);
      r.expect(s == g.add(y, x), "commutativity", [&] { return j2(x, y); });
      const auto c = g.compare(x, y);
      const bool lex = x.m != y.m ? (x.m < y.m) == (c == std::strong_ordering::less)
                                  : (g.height(x.a) <=> g.height(y.a)) == c;
      r.expect(lex, "order is lexicographic", [&] { return j2(x, y); });
      r.expect((c == std::strong_ordering::equal) == (x == y), "order is antisymmetric", [&] { return j2(x, y); });
      r.expect((g.linearize(x) <=> g.linearize(y)) == c, "linearization is monotone", [&] { return j2(x, y); });

      // eager vs lazy normalization of the summands
      ChangPair rx = x, ry = y;
      if (x.a == 0) rx = {x.m - 1, g.chain().top()};
      if (y.a == 0) ry = {y.m - 1, g.chain().top()};
      const ChangPair raw = g.add_raw(rx, ry);
      r.expect(g.normalize(raw.m, raw.a) == s, "normalization soundness", [&] { return j2(x, y); });

      const ChangPair mt = g.meet(x, y);
      const ChangPair jn = g.join(x, y);
      r.expect(g.leq(mt, x) && g.leq(mt, y) && g.leq(x, jn) && g.leq(y, jn), "meet and join bound the pair",
               [&] { return j2(x, y); });

      for (const ChangPair& z : w) {
        r.expect(g.add(s, z) == g.add(x, g.add(y, z)), "associativity", [&] { return j3(x, y, z); });
        if (g.leq(x, y)) r.expect(g.leq(g.add(x, z), g.add(y, z)), "translation invariance", [&] { return j3(x, y, z); });
        if (g.leq(x, y) && g.leq(y, z)) r.expect(g.leq(x, z), "transitivity", [&] { return j3(x, y, z); });
        r.expect(g.add(x, g.meet(y, z)) == g.meet(s, g.add(x, z)), "x + (y meet z) = (x+y) meet (x+z)",
                 [&] { return j3(x, y, z); });
      }
    }
  }

  for (const ChangPair& u : w) {
    if (!g.leq(zero, u) || u == zero) continue;
    const ProductLuGroup pg({g}, GroupElement{{u}});
    for (const ChangPair& y : w) {
      const GroupElement gy{{y}};
      const Int k = unit_bound(pg, gy);
      const ChangPair abs = g.join(y, g.neg(y));
      const bool bounded = g.leq(abs, g.scale(u, k));
      const bool least = k == 0 || !g.leq(abs, g.scale(u, k - 1));
      r.expect(bounded && least, "every positive element is a strong unit", [&] { return j2(u, y); });
    }
  }
  return r;
}

CheckReport chain_roundtrip_check(const FiniteMVAlgebra& chain, Int bound) {
  CheckReport r{"chain_roundtrip", 0, {}};
  const ChangChainGroup g = star_chain(chain);
  const ProductLuGroup pg({g}, GroupElement{{g.unit()}});
  const GammaSegment seg = gamma_segment(pg);
  const auto witness = [&] { return algebra_to_json(chain); };

  std::vector<Elem> image;
  for (Elem a = 0; a < chain.size(); ++a) image.push_back(seg.index_of(GroupElement{{g.normalize(0, a)}}));
  const MVMorphism iota(chain, seg.algebra, image);
  r.expect(check_morphism(iota).ok() && is_injective(iota) && is_surjective(iota), "a -> (0, a) is an isomorphism onto the segment",
           witness);
  r.expect(find_isomorphism(seg.algebra, chain).has_value(), "segment is isomorphic to the chain", witness);

  const Int n = g.order();
  for (Int height = 1; height <= 3 * n; ++height) {
    const ChangPair u = g.delinearize(height);
    const auto uj = [&](const ChangPair& x) { return Json{{"u", pair_json(u)}, {"x", pair_json(x)}}; };
    for (Int v = -bound * height; v <= bound * height; ++v) {
      const ChangPair x = g.delinearize(v);
      const ChangPair p = upsilon_inverse_chain(g, u, x);
      const ChangPair low = g.scale(u, p.m);
      const bool sandwich = g.leq(low, x) && !g.leq(g.add(low, u), x);
      r.expect(sandwich && p.a >= 0 && p.a < height, "n_x u <= x < (n_x + 1) u", [&] { return uj(x); });
      r.expect(upsilon_chain(g, u, p) == x, "upsilon after its inverse is the identity", [&] { return uj(x); });
    }
    for (Int m = -bound; m <= bound; ++m)
      for (Int a = 0; a < height; ++a) {
        const ChangPair p{m, static_cast<Elem>(a)};
        r.expect(upsilon_inverse_chain(g, u, upsilon_chain(g, u, p)) == p, "inverse after upsilon is the identity",
                 [&] { return uj(p); });
      }
  }
  return r;
}

}  // namespace mvg
