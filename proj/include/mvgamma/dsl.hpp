#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvgamma/errors.hpp"
#include "mvgamma/json_io.hpp"
#include "mvgamma/sweep.hpp"

namespace mvg::dsl {

struct Position {
  int line = 1;
  int column = 1;
};

enum class ParseErrorKind { lexical, syntax, duplicate_name, unknown_name };

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, Position pos, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  Position position() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  Position pos_;
  std::string message_;
};

struct AlgebraExpr {
  enum class Kind { chain, ref, product, table };
  Kind kind = Kind::chain;
  Position pos;
  int order = 0;                     // chain
  std::string name;                  // ref
  std::vector<AlgebraExpr> factors;  // product: exactly two
  Json table;                        // table
};

struct AlgebraDef {
  std::string name;
  AlgebraExpr expr;
};

struct HomDef {
  std::string name;
  std::string dom;
  std::string cod;
  std::vector<std::pair<Int, Int>> entries;  // a -> h(a), in source order
};

struct GroupDef {
  std::string name;
  std::vector<Int> fibers;               // chain orders n of Ł_n
  std::vector<std::pair<Int, Int>> unit; // (m, a) per fiber
};

// Binds a name to whatever value a JSON file holds.
struct ImportDef {
  std::string name;
  std::string path;
};

struct Command {
  enum class Kind { spec, star, gamma, roundtrip, goodseq, member, freequotient, check, export_ };
  Kind kind = Kind::spec;
  std::string name;  // empty for "check all"
  Json element;      // goodseq, member
  bool keep_zero = false;
  std::optional<int> max_size;
  std::optional<Int> window;
  std::string path;  // export
};

struct Statement {
  Position pos;
  std::variant<AlgebraDef, HomDef, GroupDef, ImportDef, Command> body;
};

struct Script {
  std::vector<Statement> statements;
};

/// Parses and resolves names: every name is bound once and before its use.
/// Throws ParseError; never crashes on arbitrary input.
Script parse_script(const std::string& text);

enum ExitCode : int { ok = 0, check_failed = 1, parse_error = 2, semantic_error = 3, internal_error = 4 };

struct ExecConfig {
  SweepConfig sweep;            // defaults for "check"
  std::optional<int> max_size;  // overrides sweep.max_size unless a command sets its own
  std::optional<Int> window;    // likewise for the window bound
};

struct RunReport {
  std::vector<Json> outcomes;  // one per executed statement, in script order
  int exit_code = ExitCode::ok;

  Json to_json() const;
};

/// Runs every statement in order. A semantic or internal error stops the run;
/// failed checks do not.
RunReport execute(const Script& script, const ExecConfig& config);

/// parse_script + execute; a parse error becomes a report with exit code 2.
RunReport run_text(const std::string& text, const ExecConfig& config);

}  // namespace mvg::dsl
