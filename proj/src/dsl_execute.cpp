#include <map>

#include "mvgamma/dsl.hpp"
#include "mvgamma/good_sequence.hpp"

namespace mvg::dsl {

namespace {

constexpr std::size_t kListedFailures = 10;
constexpr Int kMaxUnitBound = 100'000;

// A semantic error with a serialized counterexample.
class Rejected : public DomainError {
 public:
  Rejected(const std::string& what, Json detail) : DomainError(what), detail_(std::move(detail)) {}
  const Json& detail() const { return detail_; }

 private:
  Json detail_;
};

Json report_json(const CheckReport& r) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < kListedFailures; ++i)
    failures.push_back(Json{{"property", r.failures[i].property}, {"counterexample", r.failures[i].counterexample}});
  Json j;
  j["suite"] = r.name;
  j["cases"] = r.cases;
  j["pass"] = r.ok();
  j["failure_count"] = r.failures.size();
  j["failures"] = std::move(failures);
  return j;
}

const char* kind_name(const JsonValue& v) {
  switch (v.index()) {
    case 0: return "algebra";
    case 1: return "morphism";
    default: return "group";
  }
}

std::string with_article(const JsonValue& v) { return std::string(v.index() == 0 ? "an " : "a ") + kind_name(v); }

class Interpreter {
 public:
  explicit Interpreter(const ExecConfig& config) : config_(config) {}

  RunReport run(const Script& script) {
    RunReport report;
    for (const Statement& st : script.statements) {
      Json out;
      out["line"] = st.pos.line;
      out["column"] = st.pos.column;
      int code = ExitCode::ok;
      try {
        code = std::visit([&](const auto& body) { return exec(body, out); }, st.body);
        out["status"] = code == ExitCode::ok ? "ok" : "fail";
      } catch (const Rejected& e) {
        code = ExitCode::semantic_error;
        out["status"] = "error";
        out["error"] = e.what();
        out["counterexample"] = e.detail();
      } catch (const InternalError& e) {
        code = ExitCode::internal_error;
        out["status"] = "internal_error";
        out["error"] = e.what();
      } catch (const Error& e) {
        code = ExitCode::semantic_error;
        out["status"] = "error";
        out["error"] = e.what();
      } catch (const std::exception& e) {
        code = ExitCode::internal_error;
        out["status"] = "internal_error";
        out["error"] = e.what();
      }
      report.outcomes.push_back(std::move(out));
      report.exit_code = std::max(report.exit_code, code);
      if (code == ExitCode::semantic_error || code == ExitCode::internal_error) break;
    }
    return report;
  }

 private:
  // ---- lookup ------------------------------------------------------------

  const JsonValue& value(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end()) throw InternalError("name '" + name + "' passed the parser but is unbound");
    return it->second;
  }

  const FiniteMVAlgebra& algebra(const std::string& name) const {
    const JsonValue& v = value(name);
    if (const auto* a = std::get_if<FiniteMVAlgebra>(&v)) return *a;
    throw DomainError("'" + name + "' is " + with_article(v) + ", expected an algebra");
  }

  // An algebra whose tables satisfy the MV axioms.
  const FiniteMVAlgebra& mv_algebra(const std::string& name) const {
    const FiniteMVAlgebra& a = algebra(name);
    const AxiomReport axioms = check_mv_axioms(a, 1);
    if (!axioms.ok())
      throw Rejected("'" + name + "' is not an MV-algebra: " + axioms.violations[0].axiom + " fails",
                     Json{{"algebra", algebra_to_json(a)}, {"witness", axioms.violations[0].witness}});
    return a;
  }

  const ProductLuGroup& group(const std::string& name) const {
    const JsonValue& v = value(name);
    if (const auto* g = std::get_if<ProductLuGroup>(&v)) return *g;
    throw DomainError("'" + name + "' is " + with_article(v) + ", expected a group");
  }

  int max_size(const Command& c) const { return c.max_size.value_or(config_.max_size.value_or(config_.sweep.max_size)); }
  Int window(const Command& c) const { return c.window.value_or(config_.window.value_or(config_.sweep.window)); }

  SweepConfig sweep_config(const Command& c) const {
    SweepConfig s = config_.sweep;
    s.max_size = max_size(c);
    s.window = window(c);
    return s;
  }

  static int verdict(const std::vector<CheckReport>& reports, Json& out) {
    Json list = Json::array();
    bool pass = true;
    for (const CheckReport& r : reports) {
      list.push_back(report_json(r));
      pass = pass && r.ok();
    }
    out["reports"] = std::move(list);
    return pass ? ExitCode::ok : ExitCode::check_failed;
  }

  // ---- definitions -------------------------------------------------------

  FiniteMVAlgebra build(const AlgebraExpr& e) const {
    switch (e.kind) {
      case AlgebraExpr::Kind::chain: return make_chain(e.order);
      case AlgebraExpr::Kind::ref: return algebra(e.name);
      case AlgebraExpr::Kind::table: return algebra_from_json(e.table);
      case AlgebraExpr::Kind::product: {
        const FiniteMVAlgebra a = build(e.factors.at(0));
        const FiniteMVAlgebra b = build(e.factors.at(1));
        if (static_cast<long long>(a.size()) * b.size() > 4096) throw DomainError("product carrier exceeds 4096 elements");
        return make_product(a, b);
      }
    }
    throw InternalError("unhandled algebra expression");
  }

  int exec(const AlgebraDef& d, Json& out) {
    out["statement"] = "algebra";
    out["name"] = d.name;
    FiniteMVAlgebra a = build(d.expr);
    out["size"] = a.size();
    out["totally_ordered"] = a.is_totally_ordered();
    env_.emplace(d.name, std::move(a));
    return ExitCode::ok;
  }

  int exec(const HomDef& d, Json& out) {
    out["statement"] = "hom";
    out["name"] = d.name;
    const FiniteMVAlgebra& dom = algebra(d.dom);
    const FiniteMVAlgebra& cod = algebra(d.cod);
    std::vector<Elem> map(static_cast<std::size_t>(dom.size()), -1);
    for (const auto& [a, b] : d.entries) {
      if (a < 0 || a >= dom.size()) throw DomainError("source " + std::to_string(a) + " is outside " + d.dom);
      if (b < 0 || b >= cod.size()) throw DomainError("target " + std::to_string(b) + " is outside " + d.cod);
      Elem& slot = map[static_cast<std::size_t>(a)];
      if (slot >= 0) throw DomainError("source " + std::to_string(a) + " is mapped twice");
      slot = static_cast<Elem>(b);
    }
    for (std::size_t a = 0; a < map.size(); ++a)
      if (map[a] < 0) throw DomainError("source " + std::to_string(a) + " has no image");
    MVMorphism h(dom, cod, std::move(map));
    const MorphismReport check = check_morphism(h);
    if (!check.ok()) {
      Json violations = Json::array();
      for (const AxiomViolation& v : check.violations) violations.push_back(Json{{"law", v.axiom}, {"witness", v.witness}});
      throw Rejected("'" + d.name + "' is not an MV-morphism: " + check.violations[0].axiom + " fails",
                     Json{{"morphism", morphism_to_json(h)}, {"violations", violations}});
    }
    env_.emplace(d.name, std::move(h));
    return ExitCode::ok;
  }

  int exec(const GroupDef& d, Json& out) {
    out["statement"] = "group";
    out["name"] = d.name;
    if (d.fibers.size() != d.unit.size()) throw DomainError("unit needs one pair per fiber");
    std::vector<int> orders;
    std::vector<ChangPair> unit;
    for (std::size_t i = 0; i < d.fibers.size(); ++i) {
      if (d.fibers[i] < 1 || d.fibers[i] > 4095) throw DomainError("fiber order must lie in [1, 4095]");
      orders.push_back(static_cast<int>(d.fibers[i]));
      const auto [m, a] = d.unit[i];
      if (a < 0 || a > orders.back()) throw DomainError("unit component outside its chain");
      unit.push_back({m, static_cast<Elem>(a)});
    }
    std::vector<ChangChainGroup> fibers;
    GroupElement u;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      fibers.emplace_back(make_chain(orders[i]));
      u.coords.push_back(fibers.back().normalize(unit[i].m, unit[i].a));
    }
    ProductLuGroup g(std::move(fibers), std::move(u));
    out["group"] = group_to_json(g);
    env_.emplace(d.name, std::move(g));
    return ExitCode::ok;
  }

  int exec(const ImportDef& d, Json& out) {
    out["statement"] = "import";
    out["name"] = d.name;
    out["path"] = d.path;
    JsonValue v = import_json(d.path);
    out["kind"] = kind_name(v);
    env_.emplace(d.name, std::move(v));
    return ExitCode::ok;
  }

  // ---- commands ----------------------------------------------------------

  int exec(const Command& c, Json& out) {
    static const char* names[] = {"spec", "star", "gamma", "roundtrip", "goodseq", "member", "freequotient", "check", "export"};
    out["statement"] = names[static_cast<int>(c.kind)];
    out["name"] = c.name.empty() ? Json("all") : Json(c.name);
    switch (c.kind) {
      case Command::Kind::spec: {
        const FiniteMVAlgebra& a = mv_algebra(c.name);
        const CanonicalEmbedding emb = canonical_embedding(a);
        out["spectrum"] = spectrum_to_json(emb.spectrum);
        Json orders = Json::array();
        for (const QuotientResult& q : emb.quotients) orders.push_back(q.quotient.size() - 1);
        out["quotient_orders"] = std::move(orders);
        out["embedding"] = emb.embedding.map;
        return ExitCode::ok;
      }
      case Command::Kind::star: {
        const StarAlgebra s = star_algebra(mv_algebra(c.name));
        out["ambient"] = group_to_json(s.ambient);
        Json circle = Json::array();
        for (const GroupElement& x : s.a_circle) circle.push_back(element_to_json(x));
        out["a_circle"] = std::move(circle);
        return ExitCode::ok;
      }
      case Command::Kind::gamma: {
        const GammaSegment seg = gamma_segment(group(c.name));
        out["algebra"] = algebra_to_json(seg.algebra);
        Json elements = Json::array();
        for (const GroupElement& x : seg.elements) elements.push_back(element_to_json(x));
        out["elements"] = std::move(elements);
        return ExitCode::ok;
      }
      case Command::Kind::roundtrip: {
        std::vector<CheckReport> reports;
        if (std::holds_alternative<ProductLuGroup>(value(c.name))) {
          reports.push_back(verify_upsilon(Upsilon(group(c.name)), window(c)));
        } else {
          const FiniteMVAlgebra& a = mv_algebra(c.name);
          reports.push_back(star_roundtrip_check(a));
          if (a.is_totally_ordered()) reports.push_back(chain_roundtrip_check(a, window(c)));
        }
        return verdict(reports, out);
      }
      case Command::Kind::goodseq: {
        const GammaSegment seg = segment_for(c.name);
        const GroupElement x = literal(seg.group, c.element);
        const GoodSequence s = canonical_good_sequence(seg, x);
        out["x"] = element_to_json(x);
        out["entries"] = s.entries;
        Json elements = Json::array();
        for (Elem e : s.entries) elements.push_back(element_to_json(seg.element_of(e)));
        out["elements"] = std::move(elements);
        return ExitCode::ok;
      }
      case Command::Kind::member: {
        std::optional<StarAlgebra> star;
        if (std::holds_alternative<ProductLuGroup>(value(c.name))) {
          const GammaSegment seg = gamma_segment(group(c.name));
          std::vector<Elem> all(static_cast<std::size_t>(seg.algebra.size()));
          for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
          star.emplace(star_of_subalgebra(seg, std::move(all)));
        } else {
          star.emplace(star_algebra(mv_algebra(c.name)));
        }
        const GroupElement x = literal(star->ambient, c.element);
        const auto w = star_membership(*star, x);
        out["x"] = element_to_json(x);
        out["member"] = w.has_value();
        if (w) {
          out["positive_part"] = w->positive_part;
          out["negative_part"] = w->negative_part;
        }
        return ExitCode::ok;
      }
      case Command::Kind::freequotient: {
        out["report"] = snf_report_to_json(free_quotient_experiment(mv_algebra(c.name), !c.keep_zero));
        return ExitCode::ok;
      }
      case Command::Kind::check: return check(c, out);
      case Command::Kind::export_: {
        export_json(value(c.name), c.path);
        out["path"] = c.path;
        return ExitCode::ok;
      }
    }
    throw InternalError("unhandled command");
  }

  // An element literal of g; a top entry (m, n) is read as (m + 1, 0).
  static GroupElement literal(const ProductLuGroup& g, const Json& j) {
    GroupElement x = element_from_json(j);
    if (x.coords.size() != g.fiber_count())
      throw DomainError("element has " + std::to_string(x.coords.size()) + " coordinates, the group has " +
                        std::to_string(g.fiber_count()) + " fibers");
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      const ChangChainGroup& f = g.fiber(i);
      if (x.coords[i].a > f.order()) throw DomainError("coordinate " + std::to_string(i) + " lies outside its chain");
      x.coords[i] = f.normalize(x.coords[i].m, x.coords[i].a);
      const Int v = f.linearize(x.coords[i]);
      const Int u = f.linearize(g.unit().coords[i]);
      if (v > kMaxUnitBound * u || v < -kMaxUnitBound * u)
        throw DomainError("coordinate " + std::to_string(i) + " needs more than " + std::to_string(kMaxUnitBound) + " copies of the unit");
    }
    return x;
  }

  GammaSegment segment_for(const std::string& name) const {
    if (std::holds_alternative<ProductLuGroup>(value(name))) return gamma_segment(group(name));
    return gamma_segment(star_algebra(mv_algebra(name)).ambient);
  }

  int check(const Command& c, Json& out) {
    const SweepConfig s = sweep_config(c);
    out["max_size"] = s.max_size;
    out["window"] = s.window;
    if (c.name.empty()) return verdict(run_sweep(s), out);
    const JsonValue& v = value(c.name);
    if (const auto* a = std::get_if<FiniteMVAlgebra>(&v)) {
      std::vector<CheckReport> reports = algebra_suites(*a, s);
      if (reports.front().ok()) {
        CheckReport nat{"naturality", 0, {}};
        for (const MVMorphism& h : enumerate_morphisms(*a, *a, s.morphism_cap).found)
          nat.absorb(naturality_and_functoriality_check(h, s.lattice_window));
        reports.push_back(nat);
      }
      return verdict(reports, out);
    }
    if (const auto* h = std::get_if<MVMorphism>(&v)) return verdict({naturality_and_functoriality_check(*h, s.lattice_window)}, out);
    return verdict(group_suites(std::get<ProductLuGroup>(v), s), out);
  }

  const ExecConfig& config_;
  std::map<std::string, JsonValue> env_;
};

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["exit_code"] = exit_code;
  j["verdict"] = exit_code == ExitCode::ok ? "pass" : exit_code == ExitCode::check_failed ? "fail" : "error";
  j["statements"] = outcomes;
  return j;
}

RunReport execute(const Script& script, const ExecConfig& config) { return Interpreter(config).run(script); }

RunReport run_text(const std::string& text, const ExecConfig& config) {
  Script script;
  try {
    script = parse_script(text);
  } catch (const ParseError& e) {
    RunReport r;
    r.exit_code = ExitCode::parse_error;
    r.outcomes.push_back(Json{{"line", e.position().line},
                              {"column", e.position().column},
                              {"status", "parse_error"},
                              {"kind", to_string(e.kind())},
                              {"error", e.message()}});
    return r;
  }
  return execute(script, config);
}

}  // namespace mvg::dsl
