#include "mvgamma/mv_core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mvgamma/errors.hpp"

namespace mvg {

namespace {

std::string elem_str(Elem a) { return std::to_string(a); }

}  // namespace

FiniteMVAlgebra::FiniteMVAlgebra(int size, const std::vector<std::vector<Elem>>& oplus, std::vector<Elem> neg)
    : size_(size), neg_(std::move(neg)) {
  if (size < 2) throw ShapeError("carrier must have at least 2 elements, got " + std::to_string(size));
  const auto n = static_cast<std::size_t>(size);
  if (oplus.size() != n) throw ShapeError("oplus has " + std::to_string(oplus.size()) + " rows, expected " + std::to_string(size));
  if (neg_.size() != n) throw ShapeError("neg has " + std::to_string(neg_.size()) + " entries, expected " + std::to_string(size));
  oplus_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (oplus[i].size() != n)
      throw ShapeError("oplus row " + std::to_string(i) + " has " + std::to_string(oplus[i].size()) + " entries, expected " + std::to_string(size));
    for (Elem v : oplus[i]) {
      if (v < 0 || v >= size) throw ShapeError("oplus entry " + elem_str(v) + " out of range");
      oplus_.push_back(v);
    }
  }
  for (Elem v : neg_)
    if (v < 0 || v >= size) throw ShapeError("neg entry " + elem_str(v) + " out of range");

  odot_.resize(n * n);
  ominus_.resize(n * n);
  join_.resize(n * n);
  meet_.resize(n * n);
  leq_.resize(n * n);
  auto op = [&](Elem a, Elem b) { return oplus_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };
  auto ng = [&](Elem a) { return neg_[static_cast<std::size_t>(a)]; };
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b) {
      const std::size_t k = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      odot_[k] = ng(op(ng(a), ng(b)));
      // a ⊖ b = a ⊙ ¬b = ¬(¬a ⊕ b)
      ominus_[k] = ng(op(ng(a), b));
      join_[k] = op(ng(op(ng(a), b)), b);
      leq_[k] = ominus_[k] == 0 ? 1 : 0;
    }
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b) {
      const std::size_t k = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      meet_[k] = ng(join_[static_cast<std::size_t>(ng(a)) * n + static_cast<std::size_t>(ng(b))]);
    }
}

void FiniteMVAlgebra::out_of_range(Elem a) const {
  throw ShapeError("element " + elem_str(a) + " outside carrier of size " + std::to_string(size_));
}

bool FiniteMVAlgebra::is_totally_ordered() const {
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = a + 1; b < size_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteMVAlgebra::chain_order() const {
  if (!is_totally_ordered()) throw DomainError("algebra is not totally ordered");
  std::vector<Elem> order(static_cast<std::size_t>(size_));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) { return x != y && leq(x, y); });
  return order;
}

std::vector<std::vector<Elem>> FiniteMVAlgebra::oplus_table() const {
  const auto n = static_cast<std::size_t>(size_);
  std::vector<std::vector<Elem>> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i].assign(oplus_.begin() + static_cast<std::ptrdiff_t>(i * n), oplus_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return t;
}

FiniteMVAlgebra make_chain(int n) {
  if (n < 1) throw DomainError("chain order must be at least 1, got " + std::to_string(n));
  const auto k = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Elem>> oplus(k, std::vector<Elem>(k));
  std::vector<Elem> neg(k);
  for (Elem a = 0; a <= n; ++a) {
    neg[static_cast<std::size_t>(a)] = n - a;
    for (Elem b = 0; b <= n; ++b) oplus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(n, a + b);
  }
  return FiniteMVAlgebra(n + 1, oplus, std::move(neg));
}

FiniteMVAlgebra make_product(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na * nb;
  std::vector<std::vector<Elem>> oplus(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  std::vector<Elem> neg(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int xa = x / nb, xb = x % nb;
    neg[static_cast<std::size_t>(x)] = a.neg(xa) * nb + b.neg(xb);
    for (int y = 0; y < n; ++y) {
      const int ya = y / nb, yb = y % nb;
      oplus[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.oplus(xa, ya) * nb + b.oplus(xb, yb);
    }
  }
  return FiniteMVAlgebra(n, oplus, std::move(neg));
}

FiniteMVAlgebra make_product(std::span<const FiniteMVAlgebra> factors) {
  if (factors.empty()) throw DomainError("product of an empty family");
  FiniteMVAlgebra acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = make_product(acc, factors[i]);
  return acc;
}

std::size_t product_index(std::span<const int> radices, std::span<const int> digits) {
  if (radices.size() != digits.size()) throw ShapeError("digit count does not match factor count");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= radices[i]) throw ShapeError("digit out of range");
    idx = idx * static_cast<std::size_t>(radices[i]) + static_cast<std::size_t>(digits[i]);
  }
  return idx;
}

std::vector<int> product_digits(std::span<const int> radices, std::size_t index) {
  std::vector<int> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    const auto r = static_cast<std::size_t>(radices[i]);
    digits[i] = static_cast<int>(index % r);
    index /= r;
  }
  if (index != 0) throw ShapeError("product index out of range");
  return digits;
}

Elem derived(const FiniteMVAlgebra& alg, DerivedOp op, Elem a, Elem b) {
  switch (op) {
    case DerivedOp::odot: return alg.odot(a, b);
    case DerivedOp::ominus: return alg.ominus(a, b);
    case DerivedOp::join: return alg.join(a, b);
    case DerivedOp::meet: return alg.meet(a, b);
    case DerivedOp::leq: return alg.leq(a, b) ? 1 : 0;
  }
  throw InternalError("unknown derived operation");
}

AxiomReport check_mv_axioms(const FiniteMVAlgebra& alg, std::size_t max_violations) {
  AxiomReport report;
  auto fail = [&](const char* axiom, std::vector<Elem> w) {
    if (report.violations.size() < max_violations) report.violations.push_back({axiom, std::move(w)});
  };
  const int n = alg.size();
  const Elem top = alg.neg(0);
  for (Elem a = 0; a < n; ++a) {
    if (alg.oplus(a, 0) != a) fail("unit: a + 0 = a", {a});
    if (alg.neg(alg.neg(a)) != a) fail("involution: not not a = a", {a});
    if (alg.oplus(a, top) != top) fail("absorption: a + not 0 = not 0", {a});
    for (Elem b = 0; b < n; ++b) {
      if (alg.oplus(a, b) != alg.oplus(b, a)) fail("commutativity", {a, b});
      if (alg.oplus(alg.neg(alg.oplus(alg.neg(a), b)), b) != alg.oplus(alg.neg(alg.oplus(alg.neg(b), a)), a))
        fail("lukasiewicz: not(not a + b) + b = not(not b + a) + a", {a, b});
      for (Elem c = 0; c < n; ++c)
        if (alg.oplus(alg.oplus(a, b), c) != alg.oplus(a, alg.oplus(b, c))) fail("associativity", {a, b, c});
    }
  }
  return report;
}

MVMorphism::MVMorphism(FiniteMVAlgebra d, FiniteMVAlgebra c, std::vector<Elem> m)
    : dom(std::move(d)), cod(std::move(c)), map(std::move(m)) {
  if (map.size() != static_cast<std::size_t>(dom.size()))
    throw ShapeError("morphism map has " + std::to_string(map.size()) + " entries, domain has " + std::to_string(dom.size()));
  for (Elem v : map)
    if (v < 0 || v >= cod.size()) throw ShapeError("morphism value " + elem_str(v) + " outside codomain");
}

MorphismReport check_morphism(const MVMorphism& h) {
  MorphismReport report;
  if (h(0) != 0) report.violations.push_back({"zero", {0}});
  const int n = h.dom.size();
  for (Elem a = 0; a < n; ++a) {
    if (h(h.dom.neg(a)) != h.cod.neg(h(a))) report.violations.push_back({"negation", {a}});
    for (Elem b = 0; b < n; ++b)
      if (h(h.dom.oplus(a, b)) != h.cod.oplus(h(a), h(b))) report.violations.push_back({"oplus", {a, b}});
  }
  return report;
}

MVMorphism compose(const MVMorphism& first, const MVMorphism& second) {
  if (!(first.cod == second.dom)) throw DomainError("cannot compose: codomain of the first map is not the domain of the second");
  std::vector<Elem> m(first.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = second(first.map[i]);
  return MVMorphism(first.dom, second.cod, std::move(m));
}

MVMorphism identity_morphism(const FiniteMVAlgebra& alg) {
  std::vector<Elem> m(static_cast<std::size_t>(alg.size()));
  std::iota(m.begin(), m.end(), 0);
  return MVMorphism(alg, alg, std::move(m));
}

MVMorphism product_projection(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b, int which) {
  if (which != 0 && which != 1) throw DomainError("projection index must be 0 or 1");
  const int nb = b.size();
  std::vector<Elem> m(static_cast<std::size_t>(a.size() * nb));
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = which == 0 ? static_cast<Elem>(x) / nb : static_cast<Elem>(x) % nb;
  return MVMorphism(make_product(a, b), which == 0 ? a : b, std::move(m));
}

bool is_injective(const MVMorphism& h) {
  std::vector<Elem> sorted = h.map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_surjective(const MVMorphism& h) {
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(h.cod.size()), 0);
  for (Elem v : h.map) hit[static_cast<std::size_t>(v)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t x) { return x != 0; });
}

namespace {

// Backtracking over partial maps. Every assignment is closed under the
// consequences forced by 0, ¬ and ⊕ before the next branching choice.
class MorphismSearcher {
 public:
  MorphismSearcher(const FiniteMVAlgebra& dom, const FiniteMVAlgebra& cod, bool injective, std::size_t cap, bool first_only)
      : dom_(dom), cod_(cod), injective_(injective), cap_(cap), first_only_(first_only) {}

  MorphismSearch run() {
    std::vector<Elem> map(static_cast<std::size_t>(dom_.size()), -1);
    if (assign(map, 0, 0)) descend(map);
    return std::move(result_);
  }

 private:
  bool assign(std::vector<Elem>& map, Elem a, Elem v) {
    std::vector<std::pair<Elem, Elem>> work{{a, v}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      Elem& slot = map[static_cast<std::size_t>(x)];
      if (slot == y) continue;
      if (slot != -1) return false;
      if (injective_ && std::find(map.begin(), map.end(), y) != map.end()) return false;
      slot = y;
      work.emplace_back(dom_.neg(x), cod_.neg(y));
      for (Elem b = 0; b < dom_.size(); ++b) {
        const Elem hb = map[static_cast<std::size_t>(b)];
        if (hb == -1) continue;
        work.emplace_back(dom_.oplus(x, b), cod_.oplus(y, hb));
      }
    }
    return true;
  }

  void descend(const std::vector<Elem>& map) {
    if (done()) return;
    auto it = std::find(map.begin(), map.end(), -1);
    if (it == map.end()) {
      MVMorphism h(dom_, cod_, map);
      if (!check_morphism(h).ok()) throw InternalError("morphism search produced a non-morphism");
      result_.found.push_back(std::move(h));
      return;
    }
    const Elem a = static_cast<Elem>(it - map.begin());
    for (Elem v = 0; v < cod_.size() && !done(); ++v) {
      if (++result_.candidates > cap_) {
        result_.capped = true;
        return;
      }
      std::vector<Elem> next = map;
      if (assign(next, a, v)) descend(next);
    }
  }

  bool done() const { return result_.capped || (first_only_ && !result_.found.empty()); }

  const FiniteMVAlgebra& dom_;
  const FiniteMVAlgebra& cod_;
  bool injective_;
  std::size_t cap_;
  bool first_only_;
  MorphismSearch result_;
};

}  // namespace

MorphismSearch enumerate_morphisms(const FiniteMVAlgebra& dom, const FiniteMVAlgebra& cod, std::size_t candidate_cap) {
  return MorphismSearcher(dom, cod, false, candidate_cap, false).run();
}

std::optional<MVMorphism> find_isomorphism(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto search = MorphismSearcher(a, b, true, std::numeric_limits<std::size_t>::max(), true).run();
  if (search.found.empty()) return std::nullopt;
  return std::move(search.found.front());
}

std::vector<NamedAlgebra> generate_algebras(int max_size, int max_chain) {
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= max_chain && n + 1 <= max_size; ++n) out.push_back({"L" + std::to_string(n), make_chain(n)});
  auto wrap = [](const std::string& name) { return name.find('x') == std::string::npos ? name : "(" + name + ")"; };
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        if (out[i].algebra.size() * out[j].algebra.size() > max_size) continue;
        FiniteMVAlgebra p = make_product(out[i].algebra, out[j].algebra);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const NamedAlgebra& x) { return x.algebra == p; });
        if (seen) continue;
        out.push_back({wrap(out[i].name) + "x" + wrap(out[j].name), std::move(p)});
        grew = true;
      }
  }
  std::stable_sort(out.begin(), out.end(), [](const NamedAlgebra& x, const NamedAlgebra& y) { return x.algebra.size() < y.algebra.size(); });
  return out;
}

}  // namespace mvg
