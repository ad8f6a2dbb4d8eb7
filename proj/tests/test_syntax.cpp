#include "doctest.h"

#include "hap/parse.hpp"
#include "hap/syntax.hpp"

using namespace hap;

TEST_CASE("free_vars excludes bound occurrences") {
  // forall n. n = m  ~>  {m}
  FormulaPtr f = parse_formula("forall n. n = m");
  VarSet fv = free_vars(f);
  CHECK(fv.size() == 1);
  CHECK(fv.count(Var{"m", 0}) == 1);

  // k x  ~>  {x}
  TermPtr t = parse_term("k x");
  CHECK(free_vars(t) == VarSet{Var{"x", 0}});

  // s k k is closed
  CHECK(term_is_closed(parse_term("s k k")));
}

TEST_CASE("free_vars_ordered is first-occurrence order") {
  FormulaPtr f = parse_formula("y = x & x = z");
  auto ord = free_vars_ordered(f);
  REQUIRE(ord.size() == 3);
  CHECK(ord[0] == Var{"y", 0});
  CHECK(ord[1] == Var{"x", 0});
  CHECK(ord[2] == Var{"z", 0});
}

TEST_CASE("substitution on formulas") {
  Var x{"x", 0}, y{"y", 0};

  // (x = x)[0/x] = (0 = 0)
  FormulaPtr f = parse_formula("x = x");
  CHECK(formula_eq(substitute(f, x, t_zero()), parse_formula("0 = 0")));

  // (forall x. x = y)[x/y] renames the binder
  FormulaPtr g = parse_formula("forall x. x = y");
  FormulaPtr got = substitute(g, y, t_var(x));
  CHECK(formula_eq(got, parse_formula("forall x'. x' = x")));
  CHECK(alpha_eq(got, parse_formula("forall z. z = x")));

  // (p0 x)[p 2 9 / x] = p0 (p 2 9)
  TermPtr t = parse_term("p0 x");
  CHECK(term_eq(substitute(t, x, parse_term("p 2 9")), parse_term("p0 (p 2 9)")));
}

TEST_CASE("substitute then free_vars") {
  Var x{"x", 0};
  TermPtr s = parse_term("k y");
  TermPtr t = parse_term("x + p0 x * S x");
  TermPtr r = substitute(t, x, s);
  CHECK(free_vars(r).count(x) == 0);

  FormulaPtr f = parse_formula("exists m. m = x & forall x. x = x");
  FormulaPtr fr = substitute(f, x, s);
  CHECK(free_vars(fr).count(x) == 0);
}

TEST_CASE("alpha_eq is an equivalence and distinguishes structure") {
  FormulaPtr a = parse_formula("forall n. exists m. m = n + n");
  FormulaPtr b = parse_formula("forall k'. exists j. j = k' + k'");
  FormulaPtr c = parse_formula("forall u. exists v. v = u + u");
  CHECK(alpha_eq(a, a));
  CHECK(alpha_eq(a, b));
  CHECK(alpha_eq(b, a));
  CHECK(alpha_eq(b, c));
  CHECK(alpha_eq(a, c));
  CHECK(!alpha_eq(a, parse_formula("forall n. exists m. m = n + m")));
}

TEST_CASE("type_of on the constants") {
  // K[0,0] : 0 -> (0 -> 0)
  CHECK(print_type(type_of(tt_k(ty_ground(), ty_ground()))) == "0->0->0");

  // R[0] : 0 -> ((0 -> (0 -> 0)) -> (0 -> 0))
  CHECK(print_type(type_of(tt_recursor(ty_ground()))) == "0->(0->0->0)->0->0");

  // S 0 : 0
  CHECK(is_ground(type_of(tt_apply(tt_succ(), tt_zero()))));
}

TEST_CASE("type_of is deterministic") {
  TypedPtr t = parse_typed_term("R[0] 2 (\\n:0. \\a:0. S a) 3");
  TypePtr t1 = type_of(t);
  TypePtr t2 = type_of(t);
  CHECK(type_eq(t1, t2));
  CHECK(is_ground(t1));
}

TEST_CASE("type_of rejects ill-typed applications naming the subterm") {
  // (S 0) 0 applies a ground term
  TypedPtr bad = tt_apply(tt_apply(tt_succ(), tt_zero()), tt_zero());
  CHECK_THROWS_AS((void)type_of(bad), TypeError);
  try {
    (void)type_of(bad);
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("S 0") != std::string::npos);
  }

  CHECK_THROWS_AS((void)type_of(tt_apply(tt_succ(), tt_k(ty_ground(), ty_ground()))),
                  TypeError);
}

TEST_CASE("desugar: disjunction becomes a witnessed conjunction") {
  DesugarOptions opt;
  opt.eliminate_or = true;
  FormulaPtr f = parse_formula("x = 0 | x = 1");
  FormulaPtr d = desugar(f, opt);
  CHECK(formula_eq(
      d, parse_formula("exists n. (n = 0 => x = 0) & ((n = 0 => _|_) => x = 1)")));
  // the fresh witness avoids capture
  FormulaPtr g = desugar(parse_formula("n = 0 | n = 1"), opt);
  CHECK(formula_eq(
      g, parse_formula("exists n'. (n' = 0 => n = 0) & ((n' = 0 => _|_) => n = 1)")));
}

TEST_CASE("desugar: definedness and Kleene equality expand") {
  CHECK(formula_eq(desugar(parse_formula("!(k x)")), parse_formula("k x = k x")));
  FormulaPtr k = desugar(parse_formula("x ~= y"));
  CHECK(formula_eq(k, parse_formula("(x = x | y = y) => x = y")));
}

TEST_CASE("desugar is idempotent and preserves free variables") {
  DesugarOptions opt;
  opt.eliminate_or = true;
  for (const char* src :
       {"x = 0 | exists m. m = x", "!(p0 x) & ~(y = 0)", "x ~= y => (forall n. n = n)",
        "forall q. Cond(q) => F(x, q)"}) {
    FormulaPtr f = parse_formula(src);
    FormulaPtr d1 = desugar(f, opt);
    FormulaPtr d2 = desugar(d1, opt);
    CHECK(formula_eq(d1, d2));
    CHECK(free_vars(f) == free_vars(d1));
  }
}

TEST_CASE("classify") {
  CHECK(classify(parse_formula("forall n. exists m. m = n + n")) ==
        FormulaClass::Arithmetical);
  CHECK(classify(parse_formula("f ={0->0} g")) == FormulaClass::Other);
  CHECK(classify(parse_formula("x = 0 & y = 0")) == FormulaClass::Arithmetical);
  // no quantifiers, no higher-type equalities, but an applicative term
  CHECK(classify(parse_formula("k x = x")) == FormulaClass::QuantifierFree);
  CHECK(classify(parse_formula("exists m. k m = m")) == FormulaClass::Other);
  CHECK(classify(parse_formula("0 = 0 | S 0 = 0")) == FormulaClass::Arithmetical);
}
