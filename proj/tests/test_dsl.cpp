#include <doctest.h>

#include <filesystem>
#include <random>

#include "mvgamma/dsl.hpp"

using namespace mvg;
using namespace mvg::dsl;
namespace fs = std::filesystem;

namespace {

ExecConfig quick() {
  ExecConfig c;
  c.sweep.max_size = 4;
  c.sweep.window = 2;
  c.sweep.max_group_fibers = 1;
  c.sweep.max_group_chain = 2;
  c.sweep.max_unit_height = 2;
  c.sweep.lmap_group_fibers = 1;
  c.sweep.lmap_group_chain = 2;
  return c;
}

int exit_of(const std::string& text) { return run_text(text, quick()).exit_code; }

ParseError parse_failure(const std::string& text) {
  try {
    (void)parse_script(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("script was accepted: " << text);
  return ParseError(ParseErrorKind::syntax, {}, "");
}

const Json& last(const RunReport& r) { return r.outcomes.back(); }

std::string scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mvgamma_dsl_tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_SUITE("cli_dsl") {
  TEST_CASE("two statements") {
    const Script s = parse_script("algebra A = chain 2 * chain 3\nspec A");
    REQUIRE(s.statements.size() == 2);
    const auto& def = std::get<AlgebraDef>(s.statements[0].body);
    CHECK(def.name == "A");
    CHECK(def.expr.kind == AlgebraExpr::Kind::product);
    REQUIRE(def.expr.factors.size() == 2);
    CHECK(def.expr.factors[0].order == 2);
    CHECK(def.expr.factors[1].order == 3);
    const auto& cmd = std::get<Command>(s.statements[1].body);
    CHECK(cmd.kind == Command::Kind::spec);
    CHECK(cmd.name == "A");
    CHECK(s.statements[1].pos.line == 2);
    CHECK(s.statements[1].pos.column == 1);
  }

  TEST_CASE("hom definitions") {
    const Script s = parse_script("algebra A = chain 1\nalgebra B = chain 2\nhom h : A -> B { 0->0, 1->2 }");
    const auto& h = std::get<HomDef>(s.statements[2].body);
    CHECK(h.name == "h");
    CHECK(h.dom == "A");
    CHECK(h.cod == "B");
    CHECK(h.entries == std::vector<std::pair<Int, Int>>{{0, 0}, {1, 2}});
  }

  TEST_CASE("groups, tables, flags and comments") {
    const Script s = parse_script(
        "# leading comment\n"
        "group G = fibers [2, 1] unit [(0,1), (3,0)]  # trailing\n"
        "algebra T = table {\"size\":2,\"oplus\":[[0,1],[1,1]],\"neg\":[1,0]}\n"
        "algebra P = (chain 1 * T) * chain 2\n"
        "check all --max-size 6 --window 1\n"
        "freequotient P --keep-zero\n"
        "goodseq G {\"coords\":[{\"m\":1,\"a\":0},{\"m\":-2,\"a\":0}]}\n"
        "export P \"out dir/p.json\"\n"
        "import Q some/path.json\n");
    REQUIRE(s.statements.size() == 8);
    const auto& g = std::get<GroupDef>(s.statements[0].body);
    CHECK(g.fibers == std::vector<Int>{2, 1});
    CHECK(g.unit == std::vector<std::pair<Int, Int>>{{0, 1}, {3, 0}});
    CHECK(std::get<AlgebraDef>(s.statements[1].body).expr.kind == AlgebraExpr::Kind::table);
    const auto& p = std::get<AlgebraDef>(s.statements[2].body).expr;
    CHECK(p.kind == AlgebraExpr::Kind::product);
    CHECK(p.factors[0].kind == AlgebraExpr::Kind::product);
    const auto& chk = std::get<Command>(s.statements[3].body);
    CHECK(chk.name.empty());
    CHECK(chk.max_size == 6);
    CHECK(chk.window == 1);
    CHECK(std::get<Command>(s.statements[4].body).keep_zero);
    CHECK(std::get<Command>(s.statements[5].body).element["coords"][1]["m"] == -2);
    CHECK(std::get<Command>(s.statements[6].body).path == "out dir/p.json");
    CHECK(std::get<ImportDef>(s.statements[7].body).path == "some/path.json");
  }

  TEST_CASE("a missing integer is a syntax error at the end of the line") {
    const ParseError e = parse_failure("algebra A = chain");
    CHECK(e.kind() == ParseErrorKind::syntax);
    CHECK(e.position().line == 1);
    CHECK(e.position().column == 18);
  }

  TEST_CASE("error kinds are distinct") {
    CHECK(parse_failure("algebra A = chain 2 @").kind() == ParseErrorKind::lexical);
    CHECK(parse_failure("algebra A = chain 99999999999999999999").kind() == ParseErrorKind::lexical);
    CHECK(parse_failure("algebra A = chain 2x").kind() == ParseErrorKind::lexical);
    CHECK(parse_failure("export A \"open").kind() != ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = chain 2 chain 3").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = chain 2\nalgebra A = chain 3").kind() == ParseErrorKind::duplicate_name);
    CHECK(parse_failure("spec B").kind() == ParseErrorKind::unknown_name);
    CHECK(parse_failure("algebra chain = chain 2").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = chain 0").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = chain 2\ncheck A --keep-zero").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("check all --window -1").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("check all --window 1 --window 2").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = table {\"size\": }").kind() == ParseErrorKind::syntax);
    CHECK(parse_failure("algebra A = table {\"size\": 2").kind() == ParseErrorKind::lexical);
    CHECK(parse_failure("algebra é = chain 2").kind() == ParseErrorKind::lexical);
    CHECK(std::string(to_string(ParseErrorKind::duplicate_name)) != to_string(ParseErrorKind::unknown_name));
  }

  TEST_CASE("positions count lines and code points") {
    const ParseError e = parse_failure("algebra A = chain 2\n# é comment\n  spec Z");
    CHECK(e.position().line == 3);
    CHECK(e.position().column == 8);
    const ParseError d = parse_failure("algebra A = chain 2\nalgebra A = chain 3");
    CHECK(d.position().line == 2);
    CHECK(d.position().column == 9);
  }

  TEST_CASE("the parser is total") {
    const std::string seed =
        "algebra A = chain 2 * chain 3\nhom h : A -> A { 0->0 }\ngroup G = fibers [1] unit [(2,0)]\n"
        "goodseq G {\"coords\":[{\"m\":1,\"a\":0}]}\ncheck all --max-size 4\nexport A a.json\n";
    const std::string alphabet = "algebrchinspt=:{}[]()*,->#\"\\ \n\t0123456789-_'{}xyzé\x01\xff";
    std::mt19937 rng(7);
    for (int trial = 0; trial < 4000; ++trial) {
      std::string text = seed;
      std::uniform_int_distribution<int> edits(1, 6);
      for (int k = edits(rng); k > 0; --k) {
        std::uniform_int_distribution<std::size_t> where(0, text.size());
        const std::size_t at = where(rng);
        switch (rng() % 3) {
          case 0: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
          case 1:
            if (at < text.size()) text.erase(at, 1);
            break;
          default: text = text.substr(0, at); break;
        }
      }
      if (trial % 4 == 0) {
        text.clear();
        for (int k = static_cast<int>(rng() % 40); k > 0; --k) text.push_back(static_cast<char>(rng() % 256));
      }
      try {
        (void)parse_script(text);
      } catch (const ParseError& e) {
        const auto lines = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
        CHECK(e.position().line >= 1);
        CHECK(e.position().line <= lines);
        CHECK(e.position().column >= 1);
      } catch (const std::exception& e) {
        FAIL("parser threw a non-parse error on " << text << ": " << e.what());
      }
      const RunReport r = run_text(text, quick());
      CHECK(r.exit_code >= 0);
      CHECK(r.exit_code <= 4);
      CHECK_FALSE(r.to_json().dump(-1, ' ', false, Json::error_handler_t::replace).empty());
    }
  }

  TEST_CASE("exit codes") {
    CHECK(exit_of("algebra A = chain 2\nroundtrip A") == ExitCode::ok);
    CHECK(exit_of("algebra A = chain 1\nalgebra B = chain 2\nhom h : A -> B { 0->0, 1->1 }") == ExitCode::semantic_error);
    CHECK(exit_of("algebra A = chain 1\nalgebra B = chain 2\nhom h : A -> B { 0->0, 1->2 }\ncheck h") == ExitCode::ok);
    CHECK(exit_of("algebra A = chain") == ExitCode::parse_error);
    CHECK(exit_of("algebra T = table {\"size\":2,\"oplus\":[[0,1],[1,0]],\"neg\":[1,0]}\ncheck T") == ExitCode::check_failed);
    CHECK(exit_of("algebra T = table {\"size\":2,\"oplus\":[[0,1],[1,0]],\"neg\":[1,0]}\nstar T") == ExitCode::semantic_error);
    CHECK(exit_of("algebra T = table {\"size\":2,\"oplus\":[[0,1]],\"neg\":[1,0]}") == ExitCode::semantic_error);
    CHECK(exit_of("algebra A = chain 2\ngamma A") == ExitCode::semantic_error);
    CHECK(exit_of("group G = fibers [1] unit [(0,0)]") == ExitCode::semantic_error);
    CHECK(exit_of("group G = fibers [1, 1] unit [(1,0)]") == ExitCode::semantic_error);
    CHECK(exit_of("group G = fibers [2] unit [(1,0)]\ngoodseq G {\"coords\":[{\"m\":-1,\"a\":0}]}") == ExitCode::semantic_error);
    CHECK(exit_of("group G = fibers [2] unit [(1,0)]\ngoodseq G {\"coords\":[{\"m\":1,\"a\":0},{\"m\":1,\"a\":0}]}") ==
          ExitCode::semantic_error);
    CHECK(exit_of("import X /nonexistent/dir/x.json") == ExitCode::semantic_error);
    CHECK(exit_of("algebra A = chain 4095 * chain 2") == ExitCode::semantic_error);
  }

  TEST_CASE("a semantic error stops the run, a failed check does not") {
    const RunReport stop = run_text("algebra A = chain 2\ngamma A\nspec A", quick());
    CHECK(stop.outcomes.size() == 2);
    CHECK(last(stop)["status"] == "error");
    CHECK(stop.to_json()["verdict"] == "error");
    const RunReport go = run_text(
        "algebra T = table {\"size\":2,\"oplus\":[[0,1],[1,0]],\"neg\":[1,0]}\ncheck T\nalgebra A = chain 1\nspec A", quick());
    CHECK(go.outcomes.size() == 4);
    CHECK(go.exit_code == ExitCode::check_failed);
    CHECK(go.outcomes[1]["status"] == "fail");
    CHECK_FALSE(go.outcomes[1]["reports"][0]["failures"].empty());
    CHECK(go.to_json()["verdict"] == "fail");
  }

  TEST_CASE("failures carry counterexamples") {
    const RunReport r = run_text("algebra A = chain 1\nalgebra B = chain 2\nhom h : A -> B { 0->0, 1->1 }", quick());
    const Json& h = last(r);
    CHECK(h["counterexample"]["morphism"]["map"] == Json::array({0, 1}));
    CHECK(h["counterexample"]["violations"][0]["law"] == "negation");
  }

  TEST_CASE("command payloads") {
    const RunReport r = run_text(
        "algebra A = chain 1 * chain 1\n"
        "group Z2 = fibers [1] unit [(2,0)]\n"
        "group Z12 = fibers [1, 1] unit [(1,0), (2,0)]\n"
        "spec A\n"
        "star A\n"
        "gamma Z12\n"
        "goodseq Z2 {\"coords\":[{\"m\":5,\"a\":0}]}\n"
        "member A {\"coords\":[{\"m\":1,\"a\":0},{\"m\":-1,\"a\":0}]}\n"
        "freequotient A\n"
        "freequotient A --keep-zero\n",
        quick());
    REQUIRE(r.exit_code == ExitCode::ok);
    CHECK(r.outcomes[3]["spectrum"]["primes"] == Json::parse("[[0,1],[0,2]]"));
    CHECK(r.outcomes[3]["quotient_orders"] == Json::parse("[1,1]"));
    CHECK(r.outcomes[4]["a_circle"].size() == 4);
    CHECK(r.outcomes[5]["algebra"]["size"] == 6);
    CHECK(r.outcomes[6]["elements"] == Json::parse(R"([{"coords":[{"m":2,"a":0}]},{"coords":[{"m":2,"a":0}]},{"coords":[{"m":1,"a":0}]}])"));
    CHECK(r.outcomes[7]["member"] == true);
    CHECK(r.outcomes[8]["report"]["isomorphic"] == true);
    CHECK(r.outcomes[9]["report"]["isomorphic"] == false);
  }

  TEST_CASE("top entries in element literals are normalized") {
    const RunReport r = run_text("group G = fibers [1] unit [(1,0)]\nmember G {\"coords\":[{\"m\":-3,\"a\":1}]}", quick());
    REQUIRE(r.exit_code == ExitCode::ok);
    CHECK(last(r)["x"] == Json::parse(R"({"coords":[{"m":-2,"a":0}]})"));
  }

  TEST_CASE("membership against a segment-generated star") {
    const RunReport r = run_text("group G = fibers [2, 1] unit [(0,1), (1,0)]\nmember G {\"coords\":[{\"m\":-3,\"a\":1},{\"m\":4,\"a\":0}]}",
                                 quick());
    REQUIRE(r.exit_code == ExitCode::ok);
    CHECK(last(r)["member"] == true);
  }

  TEST_CASE("export and import through the DSL") {
    const std::string path = scratch("exported.json");
    const RunReport r = run_text("algebra A = chain 3\nexport A \"" + path + "\"\nimport B \"" + path + "\"\ncheck B --window 1", quick());
    CHECK(r.exit_code == ExitCode::ok);
    CHECK(r.outcomes[2]["kind"] == "algebra");
  }

  TEST_CASE("check dispatch by kind") {
    const RunReport ok = run_text("algebra A = chain 2\ngroup G = fibers [1] unit [(2,0)]\ncheck A --window 1\ncheck G --window 2\nroundtrip G",
                                  quick());
    REQUIRE(ok.exit_code == ExitCode::ok);
    std::vector<std::string> a_suites, g_suites;
    for (const Json& j : ok.outcomes[2]["reports"]) a_suites.push_back(j["suite"]);
    for (const Json& j : ok.outcomes[3]["reports"]) g_suites.push_back(j["suite"]);
    CHECK(std::find(a_suites.begin(), a_suites.end(), "naturality") != a_suites.end());
    CHECK(std::find(a_suites.begin(), a_suites.end(), "chain_roundtrip") != a_suites.end());
    CHECK(g_suites == std::vector<std::string>{"upsilon", "theorem1", "segment_generation", "good_sequences"});
    CHECK(ok.outcomes[3]["window"] == 2);
    CHECK(ok.outcomes[2]["max_size"] == 4);
  }

  TEST_CASE("check all lists every suite") {
    const RunReport r = run_text("check all --max-size 5", quick());
    CHECK(r.exit_code == ExitCode::ok);
    std::vector<std::string> suites;
    for (const Json& j : last(r)["reports"]) suites.push_back(j["suite"]);
    CHECK(suites == std::vector<std::string>{"mv_axioms", "spectrum", "star_roundtrip", "chang_group", "chain_roundtrip",
                                             "morphism_search", "iota_naturality", "chain_star_morphism", "functoriality",
                                             "lmap", "upsilon_naturality", "upsilon", "theorem1", "segment_generation",
                                             "good_sequences", "free_quotient"});
    CHECK(last(r)["max_size"] == 5);
  }

  TEST_CASE("configuration precedence") {
    ExecConfig c = quick();
    c.window = 1;
    c.max_size = 3;
    const RunReport r = run_text("algebra A = chain 1\ncheck A\ncheck A --window 2 --max-size 4", c);
    CHECK(r.outcomes[1]["window"] == 1);
    CHECK(r.outcomes[1]["max_size"] == 3);
    CHECK(r.outcomes[2]["window"] == 2);
    CHECK(r.outcomes[2]["max_size"] == 4);
  }

  TEST_CASE("reports are deterministic") {
    const std::string text =
        "algebra A = chain 2 * chain 1\ngroup G = fibers [2, 1] unit [(1,0), (2,0)]\nspec A\nstar A\ncheck A --window 1\n"
        "check G --window 2\nfreequotient A\nmember G {\"coords\":[{\"m\":1,\"a\":1},{\"m\":0,\"a\":0}]}\n";
    CHECK(run_text(text, quick()).to_json().dump() == run_text(text, quick()).to_json().dump());
    const RunReport e = run_text("spec Q", quick());
    CHECK(e.to_json().dump() == R"({"exit_code":2,"verdict":"error","statements":[{"line":1,"column":6,"status":"parse_error","kind":"unknown name","error":"'Q' is not defined"}]})");
  }
}
