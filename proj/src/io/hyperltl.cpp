#include "hyperplan/io/hyperltl.hpp"

#include <cctype>
#include <vector>

#include "hyperplan/error.hpp"

namespace hyperplan::io {

namespace {

enum class Tok { kIdent, kAtom, kLParen, kRParen, kDot, kNot, kAnd, kOr, kImplies, kIff, kEnd };

struct Token {
  Tok kind;
  std::string text;  // identifier, or atom proposition
  std::string path;  // atom path variable
  std::size_t line;
  std::size_t col;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      const auto line = line_;
      const auto col = col_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::kEnd, "", "", line, col});
        return out;
      }
      char c = s_[i_];
      auto simple = [&](Tok k, std::size_t len) {
        for (std::size_t j = 0; j < len; ++j) advance();
        out.push_back({k, "", "", line, col});
      };
      if (c == '(') simple(Tok::kLParen, 1);
      else if (c == ')') simple(Tok::kRParen, 1);
      else if (c == '.') simple(Tok::kDot, 1);
      else if (c == '!') simple(Tok::kNot, 1);
      else if (c == '&') simple(Tok::kAnd, 1);
      else if (c == '|') simple(Tok::kOr, 1);
      else if (s_.compare(i_, 2, "->") == 0) simple(Tok::kImplies, 2);
      else if (s_.compare(i_, 3, "<->") == 0) simple(Tok::kIff, 3);
      else if (c == '"') out.push_back(atom(line, col));
      else if (ident_char(c)) {
        std::string id;
        while (i_ < s_.size() && ident_char(s_[i_])) id += advance();
        out.push_back({Tok::kIdent, id, "", line, col});
      } else {
        throw ParseError(line, col, "token");
      }
    }
  }

 private:
  char advance() {
    char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#' && col_ == 1) {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Token atom(std::size_t line, std::size_t col) {
    advance();  // opening quote
    std::string prop;
    while (true) {
      if (i_ >= s_.size()) throw ParseError(line_, col_, "closing '\"'");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (i_ >= s_.size()) throw ParseError(line_, col_, "escaped character");
        c = advance();
      }
      prop += c;
    }
    if (i_ >= s_.size() || s_[i_] != '_') throw ParseError(line_, col_, "'_' after atom name");
    advance();
    std::string path;
    while (i_ < s_.size() && ident_char(s_[i_])) path += advance();
    if (path.empty()) throw ParseError(line_, col_, "path variable");
    return {Tok::kAtom, prop, path, line, col};
  }

  const std::string& s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  HyperFormula run() {
    HyperFormula f;
    while (is_ident("exists") || is_ident("forall")) {
      const bool exists = peek().text == "exists";
      const auto& kw = take();
      if (peek().kind != Tok::kIdent) fail("path variable");
      auto var = take().text;
      expect(Tok::kDot, "'.'");
      if (exists && !f.univ_vars.empty())
        throw PrefixShapeError("existential quantifier after a universal one at " +
                               std::to_string(kw.line) + ":" + std::to_string(kw.col));
      (exists ? f.exist_vars : f.univ_vars).push_back(var);
    }
    f.body = iff();
    if (peek().kind != Tok::kEnd) fail("end of input");
    f.validate();
    return f;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& take() { return t_[pos_++]; }
  bool is_ident(const char* s) const { return peek().kind == Tok::kIdent && peek().text == s; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(peek().line, peek().col, what); }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what);
    ++pos_;
  }

  LtlBody iff() {
    auto l = implies();
    while (peek().kind == Tok::kIff) {
      ++pos_;
      l = LtlBody::iff(l, implies());
    }
    return l;
  }

  LtlBody implies() {
    auto l = disj();
    if (peek().kind == Tok::kImplies) {
      ++pos_;
      return LtlBody::implies(l, implies());
    }
    return l;
  }

  LtlBody disj() {
    auto l = conj();
    while (peek().kind == Tok::kOr) {
      ++pos_;
      l = LtlBody::disj(l, conj());
    }
    return l;
  }

  LtlBody conj() {
    auto l = until();
    while (peek().kind == Tok::kAnd) {
      ++pos_;
      l = LtlBody::conj(l, until());
    }
    return l;
  }

  LtlBody until() {
    auto l = unary();
    if (is_ident("U")) {
      ++pos_;
      return LtlBody::until(l, until());
    }
    return l;
  }

  LtlBody unary() {
    if (peek().kind == Tok::kNot) {
      ++pos_;
      return LtlBody::negation(unary());
    }
    if (is_ident("X")) return ++pos_, LtlBody::next(unary());
    if (is_ident("F")) return ++pos_, LtlBody::eventually(unary());
    if (is_ident("G")) return ++pos_, LtlBody::globally(unary());
    if (is_ident("true")) return ++pos_, LtlBody::truth();
    if (is_ident("false")) return ++pos_, LtlBody::falsity();
    if (peek().kind == Tok::kAtom) {
      const auto& a = take();
      return LtlBody::atom(a.text, a.path);
    }
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      auto inner = iff();
      expect(Tok::kRParen, "')'");
      return inner;
    }
    fail("formula");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

}  // namespace

HyperFormula parse_hyperltl(const std::string& text) { return Parser(Lexer(text).run()).run(); }

std::string emit_hyperltl(const HyperFormula& f) { return f.to_string(); }

}  // namespace hyperplan::io
