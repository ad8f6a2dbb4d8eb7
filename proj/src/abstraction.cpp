#include "hap/abstraction.hpp"

#include "hap/pca.hpp"

namespace hap {

TermPtr arith_to_combinators(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Comb:
    case Term::Kind::Oracle:
    case Term::Kind::Zero:
      return t;
    case Term::Kind::SuccOf:
      return t_apply(t_comb(Comb::Succ), arith_to_combinators(t->a));
    case Term::Kind::Plus:
      return t_apply(t_apply(stdlib_term("plus"), arith_to_combinators(t->a)),
                     arith_to_combinators(t->b));
    case Term::Kind::Times:
      return t_apply(t_apply(stdlib_term("times"), arith_to_combinators(t->a)),
                     arith_to_combinators(t->b));
    case Term::Kind::Apply:
      return t_apply(arith_to_combinators(t->a), arith_to_combinators(t->b));
    case Term::Kind::Lambda:
      return t_lambda(t->var, arith_to_combinators(t->a));
  }
  throw SyntaxError("arith_to_combinators: malformed term");
}

namespace {

// Clause recursion on arithmetic-free, lambda-free terms.
TermPtr abstract_clauses(const Var& x, const TermPtr& t) {
  if (t->kind == Term::Kind::Var && t->var == x)
    return t_apply(t_apply(t_comb(Comb::S), t_comb(Comb::K)), t_comb(Comb::K));
  if (t->kind == Term::Kind::Apply)
    return t_apply(t_apply(t_comb(Comb::S), abstract_clauses(x, t->a)),
                   abstract_clauses(x, t->b));
  // variable other than x, combinator, or oracle constant
  return t_apply(t_comb(Comb::K), t);
}

}  // namespace

TermPtr abstract_untyped(const Var& x, const TermPtr& t) {
  return abstract_clauses(x, arith_to_combinators(eliminate_lambdas(t)));
}

TermPtr eliminate_lambdas(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Comb:
    case Term::Kind::Oracle:
    case Term::Kind::Zero:
      return t;
    case Term::Kind::SuccOf:
      return t_succ_of(eliminate_lambdas(t->a));
    case Term::Kind::Plus:
      return t_plus(eliminate_lambdas(t->a), eliminate_lambdas(t->b));
    case Term::Kind::Times:
      return t_times(eliminate_lambdas(t->a), eliminate_lambdas(t->b));
    case Term::Kind::Apply:
      return t_apply(eliminate_lambdas(t->a), eliminate_lambdas(t->b));
    case Term::Kind::Lambda:
      return abstract_untyped(t->var, t->a);
  }
  throw SyntaxError("eliminate_lambdas: malformed term");
}

// ---------------------------------------------------------------------------
// Typed abstraction
// ---------------------------------------------------------------------------

namespace {

TypedPtr abstract_typed_clauses(const Var& x, const TypePtr& sigma, const TypedPtr& t) {
  if (t->kind == TypedTerm::Kind::Var && t->var == x) {
    if (!type_eq(t->ty1, sigma))
      throw TypeError("abstract_typed: binder type " + print_type(sigma) +
                      " does not match occurrence type " + print_type(t->ty1));
    // s k k at sigma: S[sigma, sigma->sigma, sigma] K[sigma, sigma->sigma] K[sigma, sigma]
    TypePtr ss = ty_arrow(sigma, sigma);
    return tt_apply(tt_apply(tt_s(sigma, ss, sigma), tt_k(sigma, ss)), tt_k(sigma, sigma));
  }
  if (t->kind == TypedTerm::Kind::Apply) {
    TypedPtr f = abstract_typed_clauses(x, sigma, t->a);
    TypedPtr a = abstract_typed_clauses(x, sigma, t->b);
    // f : sigma -> (alpha -> beta), a : sigma -> alpha
    TypePtr fa = type_of(t->a);
    if (fa->kind != FiniteType::Kind::Arrow)
      throw TypeError("abstract_typed: application of a non-function");
    return tt_apply(tt_apply(tt_s(sigma, fa->left, fa->right), f), a);
  }
  return tt_apply(tt_k(type_of(t), sigma), t);
}

}  // namespace

TypedPtr abstract_typed(const Var& x, const TypePtr& sigma, const TypedPtr& t) {
  return abstract_typed_clauses(x, sigma, eliminate_typed_lambdas(t));
}

TypedPtr eliminate_typed_lambdas(const TypedPtr& t) {
  switch (t->kind) {
    case TypedTerm::Kind::Apply:
      return tt_apply(eliminate_typed_lambdas(t->a), eliminate_typed_lambdas(t->b));
    case TypedTerm::Kind::Lambda:
      return abstract_typed(t->var, t->ty1, t->a);
    default:
      return t;
  }
}

TermPtr lam(const std::vector<Var>& vars, TermPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = t_lambda(*it, std::move(body));
  return body;
}

}  // namespace hap
