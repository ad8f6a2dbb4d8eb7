#ifndef HAP_ABSTRACTION_HPP
#define HAP_ABSTRACTION_HPP

#include "hap/syntax.hpp"

// Bracket abstraction: compiles lambda sugar into pure combinator terms.
//
// The untyped algorithm first replaces the arithmetical function symbols by
// their combinator analogues (S t => succ t, t1+t2 => plus t1 t2,
// t1*t2 => times t1 t2) and then recurses:
//   \x.x        = s k k
//   \x.t        = k t          (t a variable or constant other than x)
//   \x.(t1 t2)  = s (\x.t1) (\x.t2)
// No eta or size optimisation is applied, so outputs are stable.

namespace hap {

// Rewrites S/+/x into succ/plus/times applications; output is arithmetic-free.
TermPtr arith_to_combinators(const TermPtr& t);

// \x.t as a combinator term.  Nested lambda sugar inside t is eliminated
// innermost-first.  The result has no free x and no lambdas.
TermPtr abstract_untyped(const Var& x, const TermPtr& t);

// Eliminates every lambda in t, innermost-first.
TermPtr eliminate_lambdas(const TermPtr& t);

// Typed variant; same clause structure with inferred type indices.
// The result is well-typed with type sigma -> type_of(t).
TypedPtr abstract_typed(const Var& x, const TypePtr& sigma, const TypedPtr& t);

TypedPtr eliminate_typed_lambdas(const TypedPtr& t);

// Convenience: \v1...vn. body as nested sugar nodes (not yet compiled).
TermPtr lam(const std::vector<Var>& vars, TermPtr body);

}  // namespace hap

#endif
