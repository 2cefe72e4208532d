#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "mvgamma/dsl.hpp"

namespace mvg::dsl {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::lexical: return "lexical error";
    case ParseErrorKind::syntax: return "syntax error";
    case ParseErrorKind::duplicate_name: return "duplicate name";
    case ParseErrorKind::unknown_name: return "unknown name";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, Position pos, const std::string& message)
    : Error(std::string(to_string(kind)) + " at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(message) {}

namespace {

enum class Tok { end, ident, integer, arrow, flag, string, symbol };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Int value = 0;
  std::size_t offset = 0;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"algebra", "hom",     "group",   "import",       "chain", "table",  "fibers",
                                       "unit",    "spec",    "star",    "gamma",        "roundtrip", "goodseq", "member",
                                       "freequotient", "check", "export", "all"};
  return k;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }

  Position position(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    const std::size_t start = line_starts_[line - 1];
    int column = 1;
    for (std::size_t i = start; i < offset && i < text_.size(); ++i)
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
    return {static_cast<int>(line), column};
  }

  [[noreturn]] void fail(ParseErrorKind kind, std::size_t offset, const std::string& message) const {
    throw ParseError(kind, position(offset), message);
  }

  const Token& peek() {
    if (!cached_) {
      token_ = lex();
      cached_ = true;
    }
    return token_;
  }

  Token next() {
    Token t = peek();
    cached_ = false;
    return t;
  }

  // A balanced {...} or [...] JSON fragment read from the raw text.
  Json json_fragment(const char* what) {
    drop_lookahead();
    skip_blank();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || (text_[pos_] != '{' && text_[pos_] != '[')) fail(ParseErrorKind::syntax, start, std::string("expected ") + what);
    int depth = 0;
    bool in_string = false;
    for (; pos_ < text_.size(); ++pos_) {
      const char c = text_[pos_];
      if (in_string) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '{' || c == '[') ++depth;
      else if (c == '}' || c == ']') {
        if (--depth == 0) {
          ++pos_;
          Json j = Json::parse(text_.substr(start, pos_ - start), nullptr, false);
          if (j.is_discarded()) fail(ParseErrorKind::syntax, start, std::string("malformed JSON in ") + what);
          return j;
        }
      }
    }
    fail(ParseErrorKind::lexical, start, "unterminated JSON fragment");
  }

  // A quoted string or a run of non-blank characters.
  std::string path() {
    drop_lookahead();
    skip_blank();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail(ParseErrorKind::syntax, start, "expected a path");
    if (text_[pos_] == '"') return quoted().text;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  void drop_lookahead() {
    if (cached_) {
      pos_ = token_.offset;
      cached_ = false;
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Token quoted() {
    const std::size_t start = pos_++;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') fail(ParseErrorKind::lexical, start, "unterminated string");
      if (text_[pos_] == '\\') {
        if (++pos_ >= text_.size()) break;
        const char e = text_[pos_];
        if (e != '"' && e != '\\') fail(ParseErrorKind::lexical, pos_ - 1, "unknown escape in string");
      }
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) fail(ParseErrorKind::lexical, start, "unterminated string");
    ++pos_;
    return {Tok::string, out, 0, start};
  }

  Token lex() {
    const std::size_t previous_end = pos_;
    skip_blank();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::end, "", 0, previous_end};
    const char c = text_[pos_];
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return {Tok::ident, text_.substr(start, pos_ - start), 0, start};
    }
    if (digit(c) || (c == '-' && pos_ + 1 < text_.size() && digit(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (pos_ < text_.size() && ident_char(text_[pos_])) fail(ParseErrorKind::lexical, start, "malformed integer");
      Int v = 0;
      const char* first = text_.data() + start;
      const char* last = text_.data() + pos_;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) fail(ParseErrorKind::lexical, start, "integer out of range");
      return {Tok::integer, text_.substr(start, pos_ - start), v, start};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Tok::arrow, "->", 0, start};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      pos_ += 2;
      while (pos_ < text_.size() && (ident_char(text_[pos_]) || text_[pos_] == '-')) ++pos_;
      return {Tok::flag, text_.substr(start, pos_ - start), 0, start};
    }
    if (c == '"') return quoted();
    if (std::string_view("=:{}[](),*").find(c) != std::string_view::npos) {
      ++pos_;
      return {Tok::symbol, std::string(1, c), 0, start};
    }
    if (static_cast<unsigned char>(c) >= 0x80) fail(ParseErrorKind::lexical, start, "unexpected non-ASCII character");
    fail(ParseErrorKind::lexical, start, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::vector<std::size_t> line_starts_;
  std::size_t pos_ = 0;
  Token token_;
  bool cached_ = false;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "'" + t.text + "'";
    case Tok::integer: return "integer " + t.text;
    case Tok::string: return "string";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Script parse() {
    Script s;
    while (lex_.peek().kind != Tok::end) s.statements.push_back(statement());
    return s;
  }

 private:
  [[noreturn]] void syntax(const Token& at, const std::string& expected) {
    lex_.fail(ParseErrorKind::syntax, at.offset, "expected " + expected + ", found " + describe(at));
  }

  void expect_symbol(const char* sym) {
    Token t = lex_.next();
    if (t.kind != Tok::symbol || t.text != sym) syntax(t, std::string("'") + sym + "'");
  }

  void expect_arrow() {
    Token t = lex_.next();
    if (t.kind != Tok::arrow) syntax(t, "'->'");
  }

  void expect_keyword(const char* kw) {
    Token t = lex_.next();
    if (t.kind != Tok::ident || t.text != kw) syntax(t, std::string("'") + kw + "'");
  }

  bool at_symbol(const char* sym) {
    const Token& t = lex_.peek();
    return t.kind == Tok::symbol && t.text == sym;
  }

  Int integer() {
    Token t = lex_.next();
    if (t.kind != Tok::integer) syntax(t, "an integer");
    return t.value;
  }

  Int integer_at_least(Int low, const char* what) {
    const Token& t = lex_.peek();
    const std::size_t at = t.offset;
    const Int v = integer();
    if (v < low) lex_.fail(ParseErrorKind::syntax, at, std::string(what) + " must be at least " + std::to_string(low));
    return v;
  }

  Token name_token() {
    Token t = lex_.next();
    if (t.kind != Tok::ident || keywords().count(t.text)) syntax(t, "a name");
    return t;
  }

  // A fresh name for a definition.
  std::string define() {
    Token t = name_token();
    if (!defined_.insert(t.text).second) lex_.fail(ParseErrorKind::duplicate_name, t.offset, "'" + t.text + "' is already defined");
    return t.text;
  }

  // A name that must already be defined.
  std::string use() {
    Token t = name_token();
    if (!defined_.count(t.text)) lex_.fail(ParseErrorKind::unknown_name, t.offset, "'" + t.text + "' is not defined");
    return t.text;
  }

  AlgebraExpr algebra_primary() {
    const Token& t = lex_.peek();
    AlgebraExpr e;
    e.pos = lex_.position(t.offset);
    if (t.kind == Tok::ident && t.text == "chain") {
      lex_.next();
      e.kind = AlgebraExpr::Kind::chain;
      const std::size_t at = lex_.peek().offset;
      const Int n = integer_at_least(1, "chain order");
      if (n > 4095) lex_.fail(ParseErrorKind::syntax, at, "chain order too large");
      e.order = static_cast<int>(n);
    } else if (t.kind == Tok::ident && t.text == "table") {
      lex_.next();
      e.kind = AlgebraExpr::Kind::table;
      e.table = lex_.json_fragment("an algebra table");
    } else if (t.kind == Tok::symbol && t.text == "(") {
      lex_.next();
      e = algebra_expr();
      expect_symbol(")");
    } else if (t.kind == Tok::ident && !keywords().count(t.text)) {
      e.kind = AlgebraExpr::Kind::ref;
      e.name = use();
    } else {
      syntax(t, "'chain', 'table', '(' or an algebra name");
    }
    return e;
  }

  AlgebraExpr algebra_expr() {
    AlgebraExpr left = algebra_primary();
    while (at_symbol("*")) {
      lex_.next();
      AlgebraExpr product;
      product.kind = AlgebraExpr::Kind::product;
      product.pos = left.pos;
      product.factors.push_back(std::move(left));
      product.factors.push_back(algebra_primary());
      left = std::move(product);
    }
    return left;
  }

  std::pair<Int, Int> pair() {
    expect_symbol("(");
    const Int m = integer();
    expect_symbol(",");
    const Int a = integer();
    expect_symbol(")");
    return {m, a};
  }

  void flags(Command& c, bool check_flags, bool keep_zero_flag) {
    std::set<std::string> seen;
    while (lex_.peek().kind == Tok::flag) {
      Token t = lex_.next();
      if (!seen.insert(t.text).second) lex_.fail(ParseErrorKind::syntax, t.offset, "repeated flag " + t.text);
      if (check_flags && t.text == "--max-size") {
        c.max_size = static_cast<int>(std::min<Int>(integer_at_least(2, "--max-size"), 4096));
      } else if (check_flags && t.text == "--window") {
        c.window = std::min<Int>(integer_at_least(0, "--window"), 1'000'000);
      } else if (keep_zero_flag && t.text == "--keep-zero") {
        c.keep_zero = true;
      } else {
        lex_.fail(ParseErrorKind::syntax, t.offset, "unexpected flag " + t.text);
      }
    }
  }

  Statement statement() {
    const Token head = lex_.next();
    Statement st;
    st.pos = lex_.position(head.offset);
    if (head.kind != Tok::ident) syntax(head, "a statement");
    const std::string& kw = head.text;

    if (kw == "algebra") {
      AlgebraDef d;
      d.name = define();
      expect_symbol("=");
      d.expr = algebra_expr();
      st.body = std::move(d);
    } else if (kw == "hom") {
      HomDef d;
      d.name = define();
      expect_symbol(":");
      d.dom = use();
      expect_arrow();
      d.cod = use();
      expect_symbol("{");
      do {
        const Int a = integer();
        expect_arrow();
        const Int b = integer();
        d.entries.emplace_back(a, b);
      } while (at_symbol(",") && (lex_.next(), true));
      expect_symbol("}");
      st.body = std::move(d);
    } else if (kw == "group") {
      GroupDef d;
      d.name = define();
      expect_symbol("=");
      expect_keyword("fibers");
      expect_symbol("[");
      do d.fibers.push_back(integer());
      while (at_symbol(",") && (lex_.next(), true));
      expect_symbol("]");
      expect_keyword("unit");
      expect_symbol("[");
      do d.unit.push_back(pair());
      while (at_symbol(",") && (lex_.next(), true));
      expect_symbol("]");
      st.body = std::move(d);
    } else if (kw == "import") {
      ImportDef d;
      d.name = define();
      d.path = lex_.path();
      st.body = std::move(d);
    } else {
      static const std::map<std::string, Command::Kind> commands{
          {"spec", Command::Kind::spec},           {"star", Command::Kind::star},
          {"gamma", Command::Kind::gamma},         {"roundtrip", Command::Kind::roundtrip},
          {"goodseq", Command::Kind::goodseq},     {"member", Command::Kind::member},
          {"freequotient", Command::Kind::freequotient}, {"check", Command::Kind::check},
          {"export", Command::Kind::export_}};
      auto it = commands.find(kw);
      if (it == commands.end()) syntax(head, "a statement");
      Command c;
      c.kind = it->second;
      if (c.kind == Command::Kind::check && lex_.peek().kind == Tok::ident && lex_.peek().text == "all") {
        lex_.next();
      } else {
        c.name = use();
      }
      if (c.kind == Command::Kind::goodseq || c.kind == Command::Kind::member) c.element = lex_.json_fragment("a group element");
      if (c.kind == Command::Kind::export_) c.path = lex_.path();
      flags(c, c.kind == Command::Kind::check, c.kind == Command::Kind::freequotient);
      st.body = std::move(c);
    }
    return st;
  }

  Lexer lex_;
  std::set<std::string> defined_;
};

}  // namespace

Script parse_script(const std::string& text) { return Parser(text).parse(); }

}  // namespace mvg::dsl
