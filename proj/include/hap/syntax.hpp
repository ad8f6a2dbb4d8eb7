#ifndef HAP_SYNTAX_HPP
#define HAP_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Abstract syntax for the three languages handled by the toolkit:
// the arithmetical fragment, the single-sorted applicative language
// under the logic of partial terms, and the finite-type language.
// All trees are immutable and shared.

namespace hap {

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Finite types: 0 | s->t | s*t
// ---------------------------------------------------------------------------

struct FiniteType;
using TypePtr = std::shared_ptr<const FiniteType>;

struct FiniteType {
  enum class Kind { Ground, Arrow, Product };
  Kind kind;
  TypePtr left;   // Arrow domain / Product left
  TypePtr right;  // Arrow codomain / Product right
};

TypePtr ty_ground();
TypePtr ty_arrow(TypePtr dom, TypePtr cod);
TypePtr ty_product(TypePtr l, TypePtr r);
bool type_eq(const TypePtr& a, const TypePtr& b);
bool is_ground(const TypePtr& t);
std::string print_type(const TypePtr& t);

// ---------------------------------------------------------------------------
// Variables: a name plus a disambiguating index; index k prints as k primes.
// ---------------------------------------------------------------------------

struct Var {
  std::string name;
  int index = 0;

  bool operator==(const Var& o) const { return name == o.name && index == o.index; }
  bool operator!=(const Var& o) const { return !(*this == o); }
  bool operator<(const Var& o) const {
    return name != o.name ? name < o.name : index < o.index;
  }
};

using VarSet = std::set<Var>;

std::string print_var(const Var& v);

// Smallest index >= v.index such that (v.name, index) avoids the given set.
Var fresh_var(const Var& like, const VarSet& avoid);

// ---------------------------------------------------------------------------
// Untyped terms of the applicative language.
//
// S/+/x are the primitive arithmetical function symbols, distinct from the
// combinators succ/plus/times.  Lambda is parser sugar, eliminated by the
// abstraction module; the evaluator rejects it.
// ---------------------------------------------------------------------------

enum class Comb { K, S, P, P0, P1, Succ, R };

const char* comb_name(Comb c);
int comb_arity(Comb c);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Comb, Oracle, Zero, SuccOf, Plus, Times, Apply, Lambda };
  Kind kind;
  Var var;                // Var / Lambda binder
  Comb comb = Comb::K;    // Comb
  std::string oracle_id;  // Oracle
  TermPtr a, b;           // SuccOf: a; Plus/Times/Apply: a,b; Lambda body: a
};

TermPtr t_var(Var v);
TermPtr t_var(const std::string& name, int index = 0);
TermPtr t_comb(Comb c);
TermPtr t_oracle(std::string id);
TermPtr t_zero();
TermPtr t_succ_of(TermPtr t);
TermPtr t_plus(TermPtr a, TermPtr b);
TermPtr t_times(TermPtr a, TermPtr b);
TermPtr t_apply(TermPtr f, TermPtr x);
TermPtr t_lambda(Var v, TermPtr body);
TermPtr t_num(std::uint64_t n);  // SuccOf^n(Zero)

// Left-nested application f x1 ... xn.
TermPtr t_apply_all(TermPtr f, const std::vector<TermPtr>& args);

bool term_eq(const TermPtr& a, const TermPtr& b);
bool term_is_closed(const TermPtr& t);
// Numeral literal value if t is a SuccOf-chain ending in Zero.
std::optional<std::uint64_t> term_numeral(const TermPtr& t);

// ---------------------------------------------------------------------------
// Typed terms of the finite-type language.
// ---------------------------------------------------------------------------

struct TypedTerm;
using TypedPtr = std::shared_ptr<const TypedTerm>;

struct TypedTerm {
  enum class Kind { Var, K, S, P, P0, P1, Zero, Succ, Recursor, EqTest, Apply, Lambda };
  Kind kind;
  Var var;                 // Var / Lambda binder
  TypePtr ty1, ty2, ty3;   // constructor type indices; Var: ty1; Lambda binder: ty1
  TypedPtr a, b;           // Apply: a,b; Lambda body: a
};

TypedPtr tt_var(Var v, TypePtr ty);
TypedPtr tt_k(TypePtr s, TypePtr t);
TypedPtr tt_s(TypePtr r, TypePtr s, TypePtr t);
TypedPtr tt_p(TypePtr r, TypePtr s);
TypedPtr tt_p0(TypePtr r, TypePtr s);
TypedPtr tt_p1(TypePtr r, TypePtr s);
TypedPtr tt_zero();
TypedPtr tt_succ();
TypedPtr tt_recursor(TypePtr s);
TypedPtr tt_eqtest(TypePtr s);
TypedPtr tt_apply(TypedPtr f, TypedPtr x);
TypedPtr tt_lambda(Var v, TypePtr ty, TypedPtr body);

bool typed_eq(const TypedPtr& a, const TypedPtr& b);

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The unique derivable type; throws TypeError naming the offending subterm.
TypePtr type_of(const TypedPtr& t);

// ---------------------------------------------------------------------------
// Formulas.  One carrier serves all three languages: atoms hold untyped
// terms, equalities carry an optional sort (absent = type 0 / single-sorted),
// and quantifiers carry an optional sort annotation.
//
// Defined, KleeneEq and Not are sugar nodes removed by desugar.  Guard atoms
// name the condition predicates of the forcing translation and are decided
// by the ground model.  FRel is the forcing-target relation symbol.
// ---------------------------------------------------------------------------

enum class GuardKind { Cond, Ext, Mem };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    Bottom, Equal, And, Or, Implies, ForAll, Exists,
    FRel, Guard, Defined, KleeneEq, Not
  };
  Kind kind;
  TermPtr s, t;                     // Equal/KleeneEq: s,t; Defined: s; FRel: s,t
  std::optional<TypePtr> eq_sort;   // Equal at higher type
  FormulaPtr l, r;                  // And/Or/Implies: l,r; Not/quantifier body: l
  Var var;                          // quantifier binder
  std::optional<TypePtr> sort;      // quantifier sort annotation
  GuardKind guard = GuardKind::Cond;
  std::vector<TermPtr> args;        // Guard arguments
};

FormulaPtr f_bottom();
FormulaPtr f_equal(TermPtr s, TermPtr t);
FormulaPtr f_equal_sorted(TermPtr s, TermPtr t, TypePtr sort);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr f_forall(Var v, FormulaPtr body);
FormulaPtr f_forall_sorted(Var v, TypePtr sort, FormulaPtr body);
FormulaPtr f_exists(Var v, FormulaPtr body);
FormulaPtr f_exists_sorted(Var v, TypePtr sort, FormulaPtr body);
FormulaPtr f_frel(TermPtr s, TermPtr t);
FormulaPtr f_guard(GuardKind g, std::vector<TermPtr> args);
FormulaPtr f_defined(TermPtr t);
FormulaPtr f_kleene_eq(TermPtr s, TermPtr t);
FormulaPtr f_not(FormulaPtr f);

// Right-nested conjunction of a non-empty list.
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);  // structural

// ---------------------------------------------------------------------------
// Free variables, substitution, alpha equivalence
// ---------------------------------------------------------------------------

VarSet free_vars(const TermPtr& t);
VarSet free_vars(const TypedPtr& t);
VarSet free_vars(const FormulaPtr& f);

// Free variables in order of first free occurrence.
std::vector<Var> free_vars_ordered(const FormulaPtr& f);
std::vector<Var> free_vars_ordered(const TermPtr& t);

// Capture-avoiding substitution; bound variables are renamed with the
// smallest fresh index when needed.
TermPtr substitute(const TermPtr& target, const Var& x, const TermPtr& s);
FormulaPtr substitute(const FormulaPtr& target, const Var& x, const TermPtr& s);
// Typed substitution; requires type_of(s) = type of x at each occurrence.
TypedPtr substitute(const TypedPtr& target, const Var& x, const TypedPtr& s);

bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);

// ---------------------------------------------------------------------------
// Desugaring and classification
// ---------------------------------------------------------------------------

struct DesugarOptions {
  bool eliminate_or = false;  // Or(a,b) -> exists n((n=0 -> a) & (~(n=0) -> b))
};

// Expands Defined/KleeneEq/Not (and Or when enabled).  Idempotent and
// preserves free variables.
FormulaPtr desugar(const FormulaPtr& f, const DesugarOptions& opt = {});

enum class FormulaClass { Arithmetical, QuantifierFree, Other };

FormulaClass classify(const FormulaPtr& f);
const char* formula_class_name(FormulaClass c);

// Terms built from variables, 0, S, +, x only.
bool term_is_arithmetical(const TermPtr& t);
bool formula_contains_or(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Printing.  print/parse are mutually inverse on parse trees.
// ---------------------------------------------------------------------------

std::string print_term(const TermPtr& t);
std::string print_typed(const TypedPtr& t);
std::string print_formula(const FormulaPtr& f);

}  // namespace hap

#endif
