#include "doctest.h"

#include <random>

#include "hap/parse.hpp"
#include "hap/syntax.hpp"

using namespace hap;

TEST_CASE("application is left-associative") {
  TermPtr t = parse_term("k x y");
  CHECK(term_eq(t, t_apply(t_apply(t_comb(Comb::K), t_var("x")), t_var("y"))));
}

TEST_CASE("lambda sugar parses to a sugar node") {
  TermPtr t = parse_term("\\x. x");
  REQUIRE(t->kind == Term::Kind::Lambda);
  CHECK(t->var == Var{"x", 0});
  CHECK(t->a->kind == Term::Kind::Var);
}

TEST_CASE("formula round trips") {
  FormulaPtr f = parse_formula("forall n. exists m. m = n + n");
  CHECK(f->kind == Formula::Kind::ForAll);
  CHECK(print_formula(f) == "forall n. exists m. m = n + n");
}

TEST_CASE("numerals and arithmetic precedence") {
  CHECK(term_eq(parse_term("3"), t_num(3)));
  CHECK(term_eq(parse_term("S S 0"), t_succ_of(t_succ_of(t_zero()))));
  CHECK(print_term(parse_term("S S 0")) == "2");
  // * binds tighter than +, application tighter than both
  TermPtr t = parse_term("x + y * k z w");
  CHECK(t->kind == Term::Kind::Plus);
  CHECK(t->b->kind == Term::Kind::Times);
  CHECK(t->b->b->kind == Term::Kind::Apply);
}

TEST_CASE("oracle constants are self-describing") {
  TermPtr t = parse_term("eps[x;y](y = S x)");
  REQUIRE(t->kind == Term::Kind::Oracle);
  auto spec = parse_epsilon_id(t->oracle_id);
  REQUIRE(spec.has_value());
  CHECK(spec->args.size() == 1);
  CHECK(spec->witness == Var{"y", 0});
  CHECK(formula_eq(spec->phi, parse_formula("y = S x")));
  CHECK(term_eq(parse_term(print_term(t)), t));

  TermPtr named = parse_term("$f x");
  CHECK(named->a->oracle_id == "$f");
}

TEST_CASE("typed terms parse with annotations and environments") {
  TypedPtr i = parse_typed_term("S[0,0->0,0] K[0,0->0] K[0,0]");
  CHECK(print_type(type_of(i)) == "0->0");
  TypedPtr l = parse_typed_term("\\x:0. S x");
  CHECK(print_type(type_of(l)) == "0->0");
  TypedPtr app = parse_typed_term("(\\f:(0->0). f 0) (\\x:0. x)");
  CHECK(is_ground(type_of(app)));
  CHECK_THROWS_AS((void)parse_typed_term("x y"), ParseError);  // needs annotations
  TypeEnv env;
  env[Var{"f", 0}] = ty_arrow(ty_ground(), ty_ground());
  CHECK(print_type(type_of(parse_typed_term("f 0", env))) == "0");
}

TEST_CASE("sorted quantifiers and higher-type equality") {
  FormulaPtr f = parse_formula("forall f:0->0. forall g:0->0. f ={0->0} g => g ={0->0} f");
  CHECK(f->sort.has_value());
  CHECK(print_type(*f->sort) == "0->0");
  CHECK(print_formula(parse_formula(print_formula(f))) == print_formula(f));
}

TEST_CASE("guard and relation atoms") {
  FormulaPtr f = parse_formula("Cond(q) & Ext(q, c) => (exists q'. In(x, y, q'))");
  CHECK(print_formula(parse_formula(print_formula(f))) == print_formula(f));
  FormulaPtr g = parse_formula("F(x, y)");
  CHECK(g->kind == Formula::Kind::FRel);
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)parse_formula("forall n exists m. m = n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS((void)parse_term("k ("), ParseError);
  CHECK_THROWS_AS((void)parse_term("forall"), ParseError);
}

namespace {

// Random formula generator for the print/parse round-trip property.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t pick(std::uint64_t n) { return rng() % n; }

  TermPtr term(int depth) {
    if (depth == 0) {
      switch (pick(5)) {
        case 0: return t_var("x");
        case 1: return t_var("y", 1);
        case 2: return t_num(pick(4));
        case 3: return t_comb(static_cast<Comb>(pick(7)));
        default: return t_zero();
      }
    }
    switch (pick(5)) {
      case 0: return t_apply(term(depth - 1), term(depth - 1));
      case 1: return t_plus(term(depth - 1), term(depth - 1));
      case 2: return t_times(term(depth - 1), term(depth - 1));
      case 3: return t_succ_of(term(depth - 1));
      default: return t_lambda(Var{"z", 0}, term(depth - 1));
    }
  }

  FormulaPtr formula(int depth) {
    if (depth == 0) {
      switch (pick(4)) {
        case 0: return f_equal(term(1), term(1));
        case 1: return f_bottom();
        case 2: return f_defined(term(1));
        default: return f_kleene_eq(term(1), term(1));
      }
    }
    switch (pick(7)) {
      case 0: return f_and(formula(depth - 1), formula(depth - 1));
      case 1: return f_or(formula(depth - 1), formula(depth - 1));
      case 2: return f_implies(formula(depth - 1), formula(depth - 1));
      case 3: return f_not(formula(depth - 1));
      case 4: return f_forall(Var{"n", 0}, formula(depth - 1));
      case 5: return f_exists(Var{"m", 0}, formula(depth - 1));
      default: return f_guard(GuardKind::Ext, {term(1), term(1)});
    }
  }
};

}  // namespace

TEST_CASE("print then parse is the identity on random terms and formulas") {
  Gen g(20240917);
  for (int i = 0; i < 300; ++i) {
    TermPtr t = g.term(3);
    CAPTURE(print_term(t));
    CHECK(term_eq(parse_term(print_term(t)), t));
  }
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = g.formula(3);
    CAPTURE(print_formula(f));
    CHECK(formula_eq(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("print then parse on typed terms") {
  const char* srcs[] = {
      "K[0,0*0] 0",
      "R[0->0] (\\x:0. x) (\\n:0. \\f:(0->0). \\x:0. S (f x)) 2",
      "P0[0,0->0] (P[0,0->0] 0 (\\x:0. x))",
      "E[0*0] (P[0,0] 1 2) (P[0,0] 1 2)",
  };
  for (const char* s : srcs) {
    TypedPtr t = parse_typed_term(s);
    CAPTURE(print_typed(t));
    CHECK(typed_eq(parse_typed_term(print_typed(t)), t));
    (void)type_of(t);
  }
}
