#include "hap/parse.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace hap {

namespace {

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

enum class Tok {
  Ident, Number,
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Semi, Dot, Colon, Backslash,
  Eq, KleeneEq, Arrow2,  // = ~= =>
  TyArrow,               // ->
  Amp, Pipe, Tilde, Bang, Plus, Star,
  Bottom, Dollar,
  End
};

struct Token {
  Tok kind;
  std::string text;   // Ident
  std::uint64_t num = 0;
  int primes = 0;     // trailing ' count on an identifier
  int line = 1, col = 1;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance(1);
      if (pos < src.size() && src[pos] == '#') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') advance(1);
        continue;
      }
      if (pos >= src.size()) break;
      Token t;
      t.line = line;
      t.col = col;
      char c = src[pos];
      auto two = [&](char a, char b) {
        return c == a && pos + 1 < src.size() && src[pos + 1] == b;
      };
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = pos;
        std::uint64_t n = 0;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
          n = n * 10 + static_cast<std::uint64_t>(src[j] - '0');
          ++j;
        }
        t.kind = Tok::Number;
        t.num = n;
        advance(j - pos);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        if (src.compare(pos, 3, "_|_") == 0) {
          t.kind = Tok::Bottom;
          advance(3);
        } else {
          size_t j = pos;
          while (j < src.size() &&
                 (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
            ++j;
          t.kind = Tok::Ident;
          t.text = src.substr(pos, j - pos);
          advance(j - pos);
          while (pos < src.size() && src[pos] == '\'') {
            ++t.primes;
            advance(1);
          }
        }
      } else if (two('~', '=')) {
        t.kind = Tok::KleeneEq;
        advance(2);
      } else if (two('=', '>')) {
        t.kind = Tok::Arrow2;
        advance(2);
      } else if (two('-', '>')) {
        t.kind = Tok::TyArrow;
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '[': t.kind = Tok::LBracket; break;
          case ']': t.kind = Tok::RBracket; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case ',': t.kind = Tok::Comma; break;
          case ';': t.kind = Tok::Semi; break;
          case '.': t.kind = Tok::Dot; break;
          case ':': t.kind = Tok::Colon; break;
          case '\\': t.kind = Tok::Backslash; break;
          case '=': t.kind = Tok::Eq; break;
          case '&': t.kind = Tok::Amp; break;
          case '|': t.kind = Tok::Pipe; break;
          case '~': t.kind = Tok::Tilde; break;
          case '!': t.kind = Tok::Bang; break;
          case '+': t.kind = Tok::Plus; break;
          case '*': t.kind = Tok::Star; break;
          case '$': t.kind = Tok::Dollar; break;
          default:
            fail(std::string("unexpected character '") + c + "'");
        }
        advance(1);
      }
      out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
  }
};

const std::set<std::string> kReserved = {
    "k", "s", "p", "p0", "p1", "succ", "r", "S",
    "K", "P", "P0", "P1", "R", "E",
    "forall", "exists", "F", "Cond", "Ext", "In", "eps"};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;

  explicit Parser(const std::string& src) : toks(Lexer(src).run()) {}

  const Token& peek(size_t k = 0) const {
    size_t i = at + k;
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& next() {
    const Token& t = toks[at];
    if (t.kind != Tok::End) ++at;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind == k) {
      next();
      return true;
    }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail("expected " + what);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, peek().line, peek().col);
  }

  bool peek_ident(const std::string& name, size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == Tok::Ident && t.text == name && t.primes == 0;
  }
  bool accept_ident(const std::string& name) {
    if (peek_ident(name)) {
      next();
      return true;
    }
    return false;
  }

  Var expect_var() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected a variable");
    if (t.primes == 0 && kReserved.count(t.text)) fail("'" + t.text + "' is reserved");
    next();
    return Var{t.text, t.primes};
  }

  // --- types ---

  TypePtr parse_type() {
    TypePtr l = parse_type_product();
    if (accept(Tok::TyArrow)) return ty_arrow(std::move(l), parse_type());
    return l;
  }

  TypePtr parse_type_product() {
    TypePtr l = parse_type_atom();
    while (accept(Tok::Star)) l = ty_product(std::move(l), parse_type_atom());
    return l;
  }

  TypePtr parse_type_atom() {
    if (accept(Tok::LParen)) {
      TypePtr t = parse_type();
      expect(Tok::RParen, "')' in type");
      return t;
    }
    const Token& t = peek();
    if (t.kind == Tok::Number && t.num == 0) {
      next();
      return ty_ground();
    }
    fail("expected a type");
  }

  // --- untyped terms ---

  TermPtr parse_term() {
    if (peek().kind == Tok::Backslash) {
      next();
      Var v = expect_var();
      expect(Tok::Dot, "'.' after lambda binder");
      return t_lambda(std::move(v), parse_term());
    }
    return parse_plus();
  }

  TermPtr parse_plus() {
    TermPtr l = parse_times();
    while (accept(Tok::Plus)) l = t_plus(std::move(l), parse_times());
    return l;
  }

  TermPtr parse_times() {
    TermPtr l = parse_app();
    while (peek().kind == Tok::Star) {
      next();
      l = t_times(std::move(l), parse_app());
    }
    return l;
  }

  bool starts_term_item() const {
    switch (peek().kind) {
      case Tok::Number:
      case Tok::LParen:
      case Tok::Dollar:
        return true;
      case Tok::Ident:
        return true;
      default:
        return false;
    }
  }

  TermPtr parse_app() {
    TermPtr l = parse_item();
    while (starts_term_item()) l = t_apply(std::move(l), parse_item());
    return l;
  }

  TermPtr parse_item() {
    if (peek_ident("S")) {
      next();
      return t_succ_of(parse_item());
    }
    return parse_term_atom();
  }

  TermPtr parse_term_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return t_num(t.num);
      case Tok::LParen: {
        next();
        TermPtr inner = parse_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Dollar: {
        next();
        const Token& id = peek();
        if (id.kind != Tok::Ident) fail("expected an oracle name after '$'");
        next();
        return t_oracle("$" + id.text);
      }
      case Tok::Ident: {
        if (t.primes == 0) {
          if (t.text == "k") { next(); return t_comb(Comb::K); }
          if (t.text == "s") { next(); return t_comb(Comb::S); }
          if (t.text == "p") { next(); return t_comb(Comb::P); }
          if (t.text == "p0") { next(); return t_comb(Comb::P0); }
          if (t.text == "p1") { next(); return t_comb(Comb::P1); }
          if (t.text == "succ") { next(); return t_comb(Comb::Succ); }
          if (t.text == "r") { next(); return t_comb(Comb::R); }
          if (t.text == "eps") return parse_epsilon_const();
          if (kReserved.count(t.text)) fail("'" + t.text + "' cannot appear here");
        }
        next();
        return t_var(Var{t.text, t.primes});
      }
      default:
        fail("expected a term");
    }
  }

  TermPtr parse_epsilon_const() {
    EpsilonSpec spec;
    expect_ident_tok("eps");
    expect(Tok::LBracket, "'[' after eps");
    if (peek().kind != Tok::Semi) {
      spec.args.push_back(expect_var());
      while (accept(Tok::Comma)) spec.args.push_back(expect_var());
    }
    expect(Tok::Semi, "';' before the witness variable");
    spec.witness = expect_var();
    expect(Tok::RBracket, "']'");
    expect(Tok::LParen, "'(' before the oracle formula");
    spec.phi = parse_formula();
    expect(Tok::RParen, "')' after the oracle formula");
    return t_oracle(make_epsilon_id(spec));
  }

  void expect_ident_tok(const std::string& name) {
    if (!accept_ident(name)) fail("expected '" + name + "'");
  }

  // --- typed terms ---

  TypedPtr parse_typed(TypeEnv& env) {
    if (peek().kind == Tok::Backslash) {
      next();
      Var v = expect_var();
      expect(Tok::Colon, "':' after typed binder");
      TypePtr ty = parse_binder_type();
      expect(Tok::Dot, "'.' after typed binder");
      auto saved = env.find(v) != env.end() ? std::optional<TypePtr>(env[v]) : std::nullopt;
      env[v] = ty;
      TypedPtr body = parse_typed(env);
      if (saved) env[v] = *saved; else env.erase(v);
      return tt_lambda(std::move(v), std::move(ty), std::move(body));
    }
    TypedPtr l = parse_typed_atom(env);
    while (starts_typed_atom()) l = tt_apply(std::move(l), parse_typed_atom(env));
    return l;
  }

  // Binder annotations take a full type, terminated by '.'.
  TypePtr parse_binder_type() {
    if (accept(Tok::LParen)) {
      TypePtr t = parse_type();
      expect(Tok::RParen, "')'");
      return t;
    }
    return parse_type();
  }

  bool starts_typed_atom() const {
    switch (peek().kind) {
      case Tok::Number:
      case Tok::LParen:
        return true;
      case Tok::Ident:
        return true;
      default:
        return false;
    }
  }

  TypePtr bracket_type_args_1() {
    expect(Tok::LBracket, "'['");
    TypePtr a = parse_type();
    expect(Tok::RBracket, "']'");
    return a;
  }

  std::pair<TypePtr, TypePtr> bracket_type_args_2() {
    expect(Tok::LBracket, "'['");
    TypePtr a = parse_type();
    expect(Tok::Comma, "','");
    TypePtr b = parse_type();
    expect(Tok::RBracket, "']'");
    return {a, b};
  }

  TypedPtr parse_typed_atom(TypeEnv& env) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      TypedPtr acc = tt_zero();
      for (std::uint64_t i = 0; i < t.num; ++i) acc = tt_apply(tt_succ(), acc);
      return acc;
    }
    if (t.kind == Tok::LParen) {
      next();
      TypedPtr inner = parse_typed(env);
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail("expected a typed term");
    if (t.primes == 0) {
      if (t.text == "K") {
        next();
        auto [a, b] = bracket_type_args_2();
        return tt_k(a, b);
      }
      if (t.text == "S" && peek(1).kind == Tok::LBracket) {
        next();
        expect(Tok::LBracket, "'['");
        TypePtr a = parse_type();
        expect(Tok::Comma, "','");
        TypePtr b = parse_type();
        expect(Tok::Comma, "','");
        TypePtr c = parse_type();
        expect(Tok::RBracket, "']'");
        return tt_s(a, b, c);
      }
      if (t.text == "S") {
        next();
        return tt_succ();
      }
      if (t.text == "P") {
        next();
        auto [a, b] = bracket_type_args_2();
        return tt_p(a, b);
      }
      if (t.text == "P0") {
        next();
        auto [a, b] = bracket_type_args_2();
        return tt_p0(a, b);
      }
      if (t.text == "P1") {
        next();
        auto [a, b] = bracket_type_args_2();
        return tt_p1(a, b);
      }
      if (t.text == "R") {
        next();
        return tt_recursor(bracket_type_args_1());
      }
      if (t.text == "E") {
        next();
        return tt_eqtest(bracket_type_args_1());
      }
      if (kReserved.count(t.text)) fail("'" + t.text + "' cannot appear in a typed term");
    }
    Var v = expect_var();
    if (accept(Tok::Colon)) {
      TypePtr ty;
      if (accept(Tok::LParen)) {
        ty = parse_type();
        expect(Tok::RParen, "')'");
      } else {
        const Token& z = peek();
        if (z.kind == Tok::Number && z.num == 0) {
          next();
          ty = ty_ground();
        } else {
          fail("variable annotations must be ':0' or ':(type)'");
        }
      }
      auto it = env.find(v);
      if (it != env.end() && !type_eq(it->second, ty))
        fail("conflicting type annotation for " + print_var(v));
      env[v] = ty;
      return tt_var(std::move(v), std::move(ty));
    }
    auto it = env.find(v);
    if (it == env.end()) fail("variable " + print_var(v) + " needs a type annotation");
    return tt_var(std::move(v), it->second);
  }

  // --- formulas ---

  FormulaPtr parse_formula() {
    if (peek_ident("forall") || peek_ident("exists")) {
      bool all = peek().text == "forall";
      next();
      Var v = expect_var();
      std::optional<TypePtr> sort;
      if (accept(Tok::Colon)) sort = parse_binder_type();
      expect(Tok::Dot, "'.' after quantifier binder");
      FormulaPtr body = parse_formula();
      if (sort)
        return all ? f_forall_sorted(std::move(v), *sort, std::move(body))
                   : f_exists_sorted(std::move(v), *sort, std::move(body));
      return all ? f_forall(std::move(v), std::move(body)) : f_exists(std::move(v), std::move(body));
    }
    FormulaPtr l = parse_or();
    if (accept(Tok::Arrow2)) return f_implies(std::move(l), parse_formula());
    return l;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (accept(Tok::Pipe)) l = f_or(std::move(l), parse_and());
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    while (accept(Tok::Amp)) l = f_and(std::move(l), parse_unary());
    return l;
  }

  FormulaPtr parse_unary() {
    if (accept(Tok::Tilde)) return f_not(parse_unary());
    if (peek_ident("forall") || peek_ident("exists")) return parse_formula();
    return parse_formula_atom();
  }

  FormulaPtr parse_formula_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Bottom) {
      next();
      return f_bottom();
    }
    if (t.kind == Tok::Bang) {
      next();
      return f_defined(parse_app());
    }
    if (t.kind == Tok::Ident && t.primes == 0) {
      if (t.text == "F") {
        next();
        expect(Tok::LParen, "'('");
        TermPtr a = parse_term();
        expect(Tok::Comma, "','");
        TermPtr b = parse_term();
        expect(Tok::RParen, "')'");
        return f_frel(std::move(a), std::move(b));
      }
      if (t.text == "Cond" || t.text == "Ext" || t.text == "In") {
        GuardKind g = t.text == "Cond" ? GuardKind::Cond
                     : t.text == "Ext" ? GuardKind::Ext
                                       : GuardKind::Mem;
        size_t arity = t.text == "Cond" ? 1 : t.text == "Ext" ? 2 : 3;
        next();
        expect(Tok::LParen, "'('");
        std::vector<TermPtr> args;
        args.push_back(parse_term());
        while (accept(Tok::Comma)) args.push_back(parse_term());
        if (args.size() != arity) fail("wrong number of arguments to the guard");
        expect(Tok::RParen, "')'");
        return f_guard(g, std::move(args));
      }
    }
    if (t.kind == Tok::LParen) {
      // Could be a parenthesised formula or a parenthesised term on the left
      // of = / ~=.  Try the formula reading first and fall back.
      size_t save = at;
      try {
        next();
        FormulaPtr inner = parse_formula();
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::Eq && peek().kind != Tok::KleeneEq) return inner;
      } catch (const ParseError&) {
      }
      at = save;
    }
    TermPtr lhs = parse_term();
    if (accept(Tok::KleeneEq)) return f_kleene_eq(std::move(lhs), parse_term());
    expect(Tok::Eq, "'=' or '~=' in an atomic formula");
    if (accept(Tok::LBrace)) {
      TypePtr sort = parse_type();
      expect(Tok::RBrace, "'}'");
      return f_equal_sorted(std::move(lhs), parse_term(), std::move(sort));
    }
    return f_equal(std::move(lhs), parse_term());
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("trailing input");
  }
};

}  // namespace

TypePtr parse_type(const std::string& src) {
  Parser p(src);
  TypePtr t = p.parse_type();
  p.expect_end();
  return t;
}

TermPtr parse_term(const std::string& src) {
  Parser p(src);
  TermPtr t = p.parse_term();
  p.expect_end();
  return t;
}

FormulaPtr parse_formula(const std::string& src) {
  Parser p(src);
  FormulaPtr f = p.parse_formula();
  p.expect_end();
  return f;
}

TypedPtr parse_typed_term(const std::string& src, const TypeEnv& env) {
  Parser p(src);
  TypeEnv e = env;
  TypedPtr t = p.parse_typed(e);
  p.expect_end();
  return t;
}

std::string make_epsilon_id(const EpsilonSpec& spec) {
  std::string id = "eps[";
  for (size_t i = 0; i < spec.args.size(); ++i) {
    if (i) id += ",";
    id += print_var(spec.args[i]);
  }
  id += ";";
  id += print_var(spec.witness);
  id += "](";
  id += print_formula(spec.phi);
  id += ")";
  return id;
}

std::optional<EpsilonSpec> parse_epsilon_id(const std::string& id) {
  if (id.rfind("eps[", 0) != 0) return std::nullopt;
  try {
    Parser p(id);
    EpsilonSpec spec;
    if (!p.accept_ident("eps")) return std::nullopt;
    p.expect(Tok::LBracket, "'['");
    if (p.peek().kind != Tok::Semi) {
      spec.args.push_back(p.expect_var());
      while (p.accept(Tok::Comma)) spec.args.push_back(p.expect_var());
    }
    p.expect(Tok::Semi, "';'");
    spec.witness = p.expect_var();
    p.expect(Tok::RBracket, "']'");
    p.expect(Tok::LParen, "'('");
    spec.phi = p.parse_formula();
    p.expect(Tok::RParen, "')'");
    p.expect_end();
    return spec;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

TermPtr t_epsilon(const EpsilonSpec& spec) { return t_oracle(make_epsilon_id(spec)); }

}  // namespace hap
