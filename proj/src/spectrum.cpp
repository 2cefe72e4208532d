#include "mvgamma/spectrum.hpp"

#include <algorithm>
#include <set>

#include "mvgamma/errors.hpp"

namespace mvg {

Ideal Ideal::from_members(int carrier_size, const std::vector<Elem>& members) {
  std::vector<bool> mask(static_cast<std::size_t>(carrier_size), false);
  for (Elem a : members) {
    if (a < 0 || a >= carrier_size) throw ShapeError("ideal member " + std::to_string(a) + " outside carrier");
    mask[static_cast<std::size_t>(a)] = true;
  }
  return Ideal(std::move(mask));
}

std::vector<Elem> Ideal::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

int Ideal::count() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), true)); }

bool operator<(const Ideal& x, const Ideal& y) {
  if (x.mask_.size() != y.mask_.size()) return x.mask_.size() < y.mask_.size();
  for (std::size_t i = x.mask_.size(); i-- > 0;)
    if (x.mask_[i] != y.mask_[i]) return y.mask_[i];
  return false;
}

bool is_ideal(const FiniteMVAlgebra& alg, const Ideal& set) {
  if (set.carrier_size() != alg.size()) return false;
  if (!set.contains(0)) return false;
  const int n = alg.size();
  for (Elem a = 0; a < n; ++a) {
    if (!set.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (set.contains(b) && !set.contains(alg.oplus(a, b))) return false;
      if (alg.leq(b, a) && !set.contains(b)) return false;
    }
  }
  return true;
}

Ideal ideal_closure(const FiniteMVAlgebra& alg, const std::vector<Elem>& seed) {
  const int n = alg.size();
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::vector<Elem> members;
  std::vector<Elem> work(seed.begin(), seed.end());
  work.push_back(0);
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    if (x < 0 || x >= n) throw ShapeError("seed element outside carrier");
    if (mask[static_cast<std::size_t>(x)]) continue;
    mask[static_cast<std::size_t>(x)] = true;
    members.push_back(x);
    for (Elem y : members) work.push_back(alg.oplus(x, y));
    for (Elem z = 0; z < n; ++z)
      if (!mask[static_cast<std::size_t>(z)] && alg.leq(z, x)) work.push_back(z);
  }
  return Ideal(std::move(mask));
}

Ideal principal_ideal(const FiniteMVAlgebra& alg, Elem a) { return ideal_closure(alg, {a}); }

std::vector<Ideal> enumerate_ideals(const FiniteMVAlgebra& alg) {
  std::set<Ideal> found;
  for (Elem a = 0; a < alg.size(); ++a) found.insert(principal_ideal(alg, a));
  std::vector<Ideal> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Ideal> fresh;
    const std::vector<Ideal> current(found.begin(), found.end());
    for (const Ideal& x : frontier)
      for (const Ideal& y : current) {
        std::vector<Elem> seed = x.members();
        const std::vector<Elem> ym = y.members();
        seed.insert(seed.end(), ym.begin(), ym.end());
        Ideal j = ideal_closure(alg, seed);
        if (found.insert(j).second) fresh.push_back(std::move(j));
      }
    frontier = std::move(fresh);
  }
  return {found.begin(), found.end()};
}

namespace {

void require_proper_ideal(const FiniteMVAlgebra& alg, const Ideal& p) {
  if (!is_ideal(alg, p)) throw DomainError("subset is not an ideal");
  if (p.contains(alg.top())) throw DomainError("ideal is improper");
}

}  // namespace

bool is_prime_ideal(const FiniteMVAlgebra& alg, const Ideal& p) {
  require_proper_ideal(alg, p);
  const int n = alg.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (!p.contains(alg.ominus(a, b)) && !p.contains(alg.ominus(b, a))) return false;
  return true;
}

Spectrum spectrum(const FiniteMVAlgebra& alg) {
  Spectrum sp;
  for (Ideal& i : enumerate_ideals(alg))
    if (!i.contains(alg.top()) && is_prime_ideal(alg, i)) sp.primes.push_back(std::move(i));
  return sp;
}

QuotientResult quotient(const FiniteMVAlgebra& alg, const Ideal& p) {
  require_proper_ideal(alg, p);
  const int n = alg.size();
  auto equivalent = [&](Elem a, Elem b) { return p.contains(alg.oplus(alg.ominus(a, b), alg.ominus(b, a))); };

  std::vector<Elem> reps;
  std::vector<Elem> cls(static_cast<std::size_t>(n), -1);
  for (Elem a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (equivalent(a, reps[c])) {
        cls[static_cast<std::size_t>(a)] = static_cast<Elem>(c);
        break;
      }
    if (cls[static_cast<std::size_t>(a)] == -1) {
      cls[static_cast<std::size_t>(a)] = static_cast<Elem>(reps.size());
      reps.push_back(a);
    }
  }

  const auto k = reps.size();
  auto class_leq = [&](std::size_t x, std::size_t y) { return p.contains(alg.ominus(reps[x], reps[y])); };
  bool total = true;
  for (std::size_t x = 0; x < k && total; ++x)
    for (std::size_t y = x + 1; y < k && total; ++y) total = class_leq(x, y) || class_leq(y, x);

  // renumber[c] = final index of class c
  std::vector<Elem> renumber(k);
  for (std::size_t c = 0; c < k; ++c) renumber[c] = static_cast<Elem>(c);
  if (total) {
    for (std::size_t c = 0; c < k; ++c) {
      Elem below = 0;
      for (std::size_t d = 0; d < k; ++d)
        if (d != c && class_leq(d, c)) ++below;
      renumber[c] = below;
    }
  }
  std::vector<Elem> new_reps(k);
  for (std::size_t c = 0; c < k; ++c) new_reps[static_cast<std::size_t>(renumber[c])] = reps[c];
  for (Elem& c : cls) c = renumber[static_cast<std::size_t>(c)];

  std::vector<std::vector<Elem>> oplus(k, std::vector<Elem>(k));
  std::vector<Elem> neg(k);
  for (std::size_t x = 0; x < k; ++x) {
    neg[x] = cls[static_cast<std::size_t>(alg.neg(new_reps[x]))];
    for (std::size_t y = 0; y < k; ++y) oplus[x][y] = cls[static_cast<std::size_t>(alg.oplus(new_reps[x], new_reps[y]))];
  }
  FiniteMVAlgebra q(static_cast<int>(k), oplus, std::move(neg));
  MVMorphism proj(alg, q, cls);
  return QuotientResult{std::move(q), std::move(proj), std::move(cls)};
}

Ideal kernel(const MVMorphism& h) { return preimage(h, Ideal::from_members(h.cod.size(), {0})); }

Ideal preimage(const MVMorphism& h, const Ideal& p) {
  if (p.carrier_size() != h.cod.size()) throw ShapeError("ideal does not live on the codomain");
  std::vector<bool> mask(static_cast<std::size_t>(h.dom.size()));
  for (Elem a = 0; a < h.dom.size(); ++a) mask[static_cast<std::size_t>(a)] = p.contains(h(a));
  return Ideal(std::move(mask));
}

CanonicalEmbedding canonical_embedding(const FiniteMVAlgebra& alg) {
  Spectrum sp = spectrum(alg);
  if (sp.primes.empty()) throw InternalError("nontrivial finite algebra with empty spectrum");
  std::vector<QuotientResult> quotients;
  std::vector<FiniteMVAlgebra> factors;
  std::vector<int> radices;
  for (const Ideal& p : sp.primes) {
    quotients.push_back(quotient(alg, p));
    factors.push_back(quotients.back().quotient);
    radices.push_back(quotients.back().quotient.size());
  }
  FiniteMVAlgebra prod = make_product(factors);
  std::vector<Elem> map(static_cast<std::size_t>(alg.size()));
  std::vector<int> digits(quotients.size());
  for (Elem a = 0; a < alg.size(); ++a) {
    for (std::size_t i = 0; i < quotients.size(); ++i) digits[i] = quotients[i].class_of[static_cast<std::size_t>(a)];
    map[static_cast<std::size_t>(a)] = static_cast<Elem>(product_index(radices, digits));
  }
  MVMorphism emb(alg, std::move(prod), std::move(map));
  return CanonicalEmbedding{std::move(sp), std::move(quotients), std::move(emb)};
}

RestrictedMorphism restrict_morphism(const MVMorphism& h, const Ideal& p) {
  if (!is_prime_ideal(h.cod, p)) throw DomainError("ideal is not prime in the codomain");
  Ideal pre = preimage(h, p);
  if (!is_prime_ideal(h.dom, pre)) throw InternalError("preimage of a prime ideal is not prime");
  QuotientResult dq = quotient(h.dom, pre);
  QuotientResult cq = quotient(h.cod, p);
  std::vector<Elem> map(static_cast<std::size_t>(dq.quotient.size()), -1);
  for (Elem a = 0; a < h.dom.size(); ++a) {
    const Elem src = dq.class_of[static_cast<std::size_t>(a)];
    const Elem dst = cq.class_of[static_cast<std::size_t>(h(a))];
    Elem& slot = map[static_cast<std::size_t>(src)];
    if (slot != -1 && slot != dst) throw InternalError("restricted morphism is not well defined on classes");
    slot = dst;
  }
  MVMorphism r(dq.quotient, cq.quotient, std::move(map));
  return RestrictedMorphism{std::move(pre), std::move(dq), std::move(cq), std::move(r)};
}

}  // namespace mvg
