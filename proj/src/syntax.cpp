#include "hap/syntax.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hap {

// ---------------------------------------------------------------------------
// Finite types
// ---------------------------------------------------------------------------

TypePtr ty_ground() {
  static const TypePtr g = std::make_shared<FiniteType>(FiniteType{FiniteType::Kind::Ground, nullptr, nullptr});
  return g;
}

TypePtr ty_arrow(TypePtr dom, TypePtr cod) {
  return std::make_shared<FiniteType>(FiniteType{FiniteType::Kind::Arrow, std::move(dom), std::move(cod)});
}

TypePtr ty_product(TypePtr l, TypePtr r) {
  return std::make_shared<FiniteType>(FiniteType{FiniteType::Kind::Product, std::move(l), std::move(r)});
}

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == FiniteType::Kind::Ground) return true;
  return type_eq(a->left, b->left) && type_eq(a->right, b->right);
}

bool is_ground(const TypePtr& t) { return t && t->kind == FiniteType::Kind::Ground; }

namespace {

// Arrow is right-associative and binds weaker than product.
void print_type_rec(std::ostringstream& out, const TypePtr& t, bool arrow_left, bool product_arg) {
  switch (t->kind) {
    case FiniteType::Kind::Ground:
      out << '0';
      return;
    case FiniteType::Kind::Arrow: {
      bool parens = arrow_left || product_arg;
      if (parens) out << '(';
      print_type_rec(out, t->left, true, false);
      out << "->";
      print_type_rec(out, t->right, false, false);
      if (parens) out << ')';
      return;
    }
    case FiniteType::Kind::Product: {
      // product left arg must parenthesise a nested product to keep
      // printing unambiguous with left association
      if (product_arg) out << '(';
      print_type_rec(out, t->left, false, true);
      out << '*';
      print_type_rec(out, t->right, false, true);
      if (product_arg) out << ')';
      return;
    }
  }
}

}  // namespace

std::string print_type(const TypePtr& t) {
  std::ostringstream out;
  print_type_rec(out, t, false, false);
  return out.str();
}

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

std::string print_var(const Var& v) {
  std::string s = v.name;
  for (int i = 0; i < v.index; ++i) s += '\'';
  return s;
}

Var fresh_var(const Var& like, const VarSet& avoid) {
  Var v = like;
  while (avoid.count(v)) ++v.index;
  return v;
}

// ---------------------------------------------------------------------------
// Untyped terms
// ---------------------------------------------------------------------------

const char* comb_name(Comb c) {
  switch (c) {
    case Comb::K: return "k";
    case Comb::S: return "s";
    case Comb::P: return "p";
    case Comb::P0: return "p0";
    case Comb::P1: return "p1";
    case Comb::Succ: return "succ";
    case Comb::R: return "r";
  }
  return "?";
}

int comb_arity(Comb c) {
  switch (c) {
    case Comb::K: return 2;
    case Comb::S: return 3;
    case Comb::P: return 2;
    case Comb::P0: return 1;
    case Comb::P1: return 1;
    case Comb::Succ: return 1;
    case Comb::R: return 3;
  }
  return 0;
}

namespace {
TermPtr mk_term(Term t) { return std::make_shared<Term>(std::move(t)); }
}  // namespace

TermPtr t_var(Var v) {
  Term t;
  t.kind = Term::Kind::Var;
  t.var = std::move(v);
  return mk_term(std::move(t));
}

TermPtr t_var(const std::string& name, int index) { return t_var(Var{name, index}); }

TermPtr t_comb(Comb c) {
  Term t;
  t.kind = Term::Kind::Comb;
  t.comb = c;
  return mk_term(std::move(t));
}

TermPtr t_oracle(std::string id) {
  Term t;
  t.kind = Term::Kind::Oracle;
  t.oracle_id = std::move(id);
  return mk_term(std::move(t));
}

TermPtr t_zero() {
  Term t;
  t.kind = Term::Kind::Zero;
  return mk_term(std::move(t));
}

TermPtr t_succ_of(TermPtr x) {
  Term t;
  t.kind = Term::Kind::SuccOf;
  t.a = std::move(x);
  return mk_term(std::move(t));
}

TermPtr t_plus(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Plus;
  t.a = std::move(a);
  t.b = std::move(b);
  return mk_term(std::move(t));
}

TermPtr t_times(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Times;
  t.a = std::move(a);
  t.b = std::move(b);
  return mk_term(std::move(t));
}

TermPtr t_apply(TermPtr f, TermPtr x) {
  Term t;
  t.kind = Term::Kind::Apply;
  t.a = std::move(f);
  t.b = std::move(x);
  return mk_term(std::move(t));
}

TermPtr t_lambda(Var v, TermPtr body) {
  Term t;
  t.kind = Term::Kind::Lambda;
  t.var = std::move(v);
  t.a = std::move(body);
  return mk_term(std::move(t));
}

TermPtr t_num(std::uint64_t n) {
  TermPtr t = t_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = t_succ_of(t);
  return t;
}

TermPtr t_apply_all(TermPtr f, const std::vector<TermPtr>& args) {
  for (const auto& a : args) f = t_apply(std::move(f), a);
  return f;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Comb: return a->comb == b->comb;
    case Term::Kind::Oracle: return a->oracle_id == b->oracle_id;
    case Term::Kind::Zero: return true;
    case Term::Kind::SuccOf: return term_eq(a->a, b->a);
    case Term::Kind::Plus:
    case Term::Kind::Times:
    case Term::Kind::Apply:
      return term_eq(a->a, b->a) && term_eq(a->b, b->b);
    case Term::Kind::Lambda:
      return a->var == b->var && term_eq(a->a, b->a);
  }
  return false;
}

bool term_is_closed(const TermPtr& t) { return free_vars(t).empty(); }

std::optional<std::uint64_t> term_numeral(const TermPtr& t) {
  std::uint64_t n = 0;
  const Term* cur = t.get();
  while (cur->kind == Term::Kind::SuccOf) {
    ++n;
    cur = cur->a.get();
  }
  if (cur->kind == Term::Kind::Zero) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Typed terms
// ---------------------------------------------------------------------------

namespace {
TypedPtr mk_typed(TypedTerm t) { return std::make_shared<TypedTerm>(std::move(t)); }
}  // namespace

TypedPtr tt_var(Var v, TypePtr ty) {
  TypedTerm t;
  t.kind = TypedTerm::Kind::Var;
  t.var = std::move(v);
  t.ty1 = std::move(ty);
  return mk_typed(std::move(t));
}

TypedPtr tt_k(TypePtr s, TypePtr t) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::K;
  x.ty1 = std::move(s);
  x.ty2 = std::move(t);
  return mk_typed(std::move(x));
}

TypedPtr tt_s(TypePtr r, TypePtr s, TypePtr t) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::S;
  x.ty1 = std::move(r);
  x.ty2 = std::move(s);
  x.ty3 = std::move(t);
  return mk_typed(std::move(x));
}

TypedPtr tt_p(TypePtr r, TypePtr s) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::P;
  x.ty1 = std::move(r);
  x.ty2 = std::move(s);
  return mk_typed(std::move(x));
}

TypedPtr tt_p0(TypePtr r, TypePtr s) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::P0;
  x.ty1 = std::move(r);
  x.ty2 = std::move(s);
  return mk_typed(std::move(x));
}

TypedPtr tt_p1(TypePtr r, TypePtr s) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::P1;
  x.ty1 = std::move(r);
  x.ty2 = std::move(s);
  return mk_typed(std::move(x));
}

TypedPtr tt_zero() {
  TypedTerm x;
  x.kind = TypedTerm::Kind::Zero;
  return mk_typed(std::move(x));
}

TypedPtr tt_succ() {
  TypedTerm x;
  x.kind = TypedTerm::Kind::Succ;
  return mk_typed(std::move(x));
}

TypedPtr tt_recursor(TypePtr s) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::Recursor;
  x.ty1 = std::move(s);
  return mk_typed(std::move(x));
}

TypedPtr tt_eqtest(TypePtr s) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::EqTest;
  x.ty1 = std::move(s);
  return mk_typed(std::move(x));
}

TypedPtr tt_apply(TypedPtr f, TypedPtr a) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::Apply;
  x.a = std::move(f);
  x.b = std::move(a);
  return mk_typed(std::move(x));
}

TypedPtr tt_lambda(Var v, TypePtr ty, TypedPtr body) {
  TypedTerm x;
  x.kind = TypedTerm::Kind::Lambda;
  x.var = std::move(v);
  x.ty1 = std::move(ty);
  x.a = std::move(body);
  return mk_typed(std::move(x));
}

bool typed_eq(const TypedPtr& a, const TypedPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  auto tyeq = [](const TypePtr& x, const TypePtr& y) {
    return (!x && !y) || (x && y && type_eq(x, y));
  };
  switch (a->kind) {
    case TypedTerm::Kind::Var: return a->var == b->var && tyeq(a->ty1, b->ty1);
    case TypedTerm::Kind::Zero:
    case TypedTerm::Kind::Succ:
      return true;
    case TypedTerm::Kind::Recursor:
    case TypedTerm::Kind::EqTest:
      return tyeq(a->ty1, b->ty1);
    case TypedTerm::Kind::K:
    case TypedTerm::Kind::P:
    case TypedTerm::Kind::P0:
    case TypedTerm::Kind::P1:
      return tyeq(a->ty1, b->ty1) && tyeq(a->ty2, b->ty2);
    case TypedTerm::Kind::S:
      return tyeq(a->ty1, b->ty1) && tyeq(a->ty2, b->ty2) && tyeq(a->ty3, b->ty3);
    case TypedTerm::Kind::Apply:
      return typed_eq(a->a, b->a) && typed_eq(a->b, b->b);
    case TypedTerm::Kind::Lambda:
      return a->var == b->var && tyeq(a->ty1, b->ty1) && typed_eq(a->a, b->a);
  }
  return false;
}

TypePtr type_of(const TypedPtr& t) {
  switch (t->kind) {
    case TypedTerm::Kind::Var:
      return t->ty1;
    case TypedTerm::Kind::K:
      // sigma -> (tau -> sigma)
      return ty_arrow(t->ty1, ty_arrow(t->ty2, t->ty1));
    case TypedTerm::Kind::S: {
      // (rho -> (sigma -> tau)) -> ((rho -> sigma) -> (rho -> tau))
      const TypePtr &rho = t->ty1, &sig = t->ty2, &tau = t->ty3;
      return ty_arrow(ty_arrow(rho, ty_arrow(sig, tau)),
                      ty_arrow(ty_arrow(rho, sig), ty_arrow(rho, tau)));
    }
    case TypedTerm::Kind::P:
      return ty_arrow(t->ty1, ty_arrow(t->ty2, ty_product(t->ty1, t->ty2)));
    case TypedTerm::Kind::P0:
      return ty_arrow(ty_product(t->ty1, t->ty2), t->ty1);
    case TypedTerm::Kind::P1:
      return ty_arrow(ty_product(t->ty1, t->ty2), t->ty2);
    case TypedTerm::Kind::Zero:
      return ty_ground();
    case TypedTerm::Kind::Succ:
      return ty_arrow(ty_ground(), ty_ground());
    case TypedTerm::Kind::Recursor: {
      // sigma -> ((0 -> (sigma -> sigma)) -> (0 -> sigma))
      const TypePtr& sig = t->ty1;
      return ty_arrow(sig, ty_arrow(ty_arrow(ty_ground(), ty_arrow(sig, sig)),
                                    ty_arrow(ty_ground(), sig)));
    }
    case TypedTerm::Kind::EqTest:
      return ty_arrow(t->ty1, ty_arrow(t->ty1, ty_ground()));
    case TypedTerm::Kind::Apply: {
      TypePtr f = type_of(t->a);
      TypePtr x = type_of(t->b);
      if (f->kind != FiniteType::Kind::Arrow)
        throw TypeError("application of a non-function: " + print_typed(t->a) +
                        " : " + print_type(f));
      if (!type_eq(f->left, x))
        throw TypeError("argument type mismatch at " + print_typed(t) + ": expected " +
                        print_type(f->left) + ", got " + print_type(x));
      return f->right;
    }
    case TypedTerm::Kind::Lambda:
      return ty_arrow(t->ty1, type_of(t->a));
  }
  throw TypeError("malformed typed term");
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

namespace {
FormulaPtr mk_formula(Formula f) { return std::make_shared<Formula>(std::move(f)); }
}  // namespace

FormulaPtr f_bottom() {
  Formula f;
  f.kind = Formula::Kind::Bottom;
  return mk_formula(std::move(f));
}

FormulaPtr f_equal(TermPtr s, TermPtr t) {
  Formula f;
  f.kind = Formula::Kind::Equal;
  f.s = std::move(s);
  f.t = std::move(t);
  return mk_formula(std::move(f));
}

FormulaPtr f_equal_sorted(TermPtr s, TermPtr t, TypePtr sort) {
  if (is_ground(sort)) return f_equal(std::move(s), std::move(t));
  Formula f;
  f.kind = Formula::Kind::Equal;
  f.s = std::move(s);
  f.t = std::move(t);
  f.eq_sort = std::move(sort);
  return mk_formula(std::move(f));
}

FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
  Formula f;
  f.kind = Formula::Kind::And;
  f.l = std::move(l);
  f.r = std::move(r);
  return mk_formula(std::move(f));
}

FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
  Formula f;
  f.kind = Formula::Kind::Or;
  f.l = std::move(l);
  f.r = std::move(r);
  return mk_formula(std::move(f));
}

FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) {
  Formula f;
  f.kind = Formula::Kind::Implies;
  f.l = std::move(l);
  f.r = std::move(r);
  return mk_formula(std::move(f));
}

FormulaPtr f_forall(Var v, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::ForAll;
  f.var = std::move(v);
  f.l = std::move(body);
  return mk_formula(std::move(f));
}

FormulaPtr f_forall_sorted(Var v, TypePtr sort, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::ForAll;
  f.var = std::move(v);
  f.sort = std::move(sort);
  f.l = std::move(body);
  return mk_formula(std::move(f));
}

FormulaPtr f_exists(Var v, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.var = std::move(v);
  f.l = std::move(body);
  return mk_formula(std::move(f));
}

FormulaPtr f_exists_sorted(Var v, TypePtr sort, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.var = std::move(v);
  f.sort = std::move(sort);
  f.l = std::move(body);
  return mk_formula(std::move(f));
}

FormulaPtr f_frel(TermPtr s, TermPtr t) {
  Formula f;
  f.kind = Formula::Kind::FRel;
  f.s = std::move(s);
  f.t = std::move(t);
  return mk_formula(std::move(f));
}

FormulaPtr f_guard(GuardKind g, std::vector<TermPtr> args) {
  Formula f;
  f.kind = Formula::Kind::Guard;
  f.guard = g;
  f.args = std::move(args);
  return mk_formula(std::move(f));
}

FormulaPtr f_defined(TermPtr t) {
  Formula f;
  f.kind = Formula::Kind::Defined;
  f.s = std::move(t);
  return mk_formula(std::move(f));
}

FormulaPtr f_kleene_eq(TermPtr s, TermPtr t) {
  Formula f;
  f.kind = Formula::Kind::KleeneEq;
  f.s = std::move(s);
  f.t = std::move(t);
  return mk_formula(std::move(f));
}

FormulaPtr f_not(FormulaPtr x) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.l = std::move(x);
  return mk_formula(std::move(f));
}

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw SyntaxError("f_and_all: empty conjunction");
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = f_and(*it, acc);
  return acc;
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  auto opt_sort_eq = [](const std::optional<TypePtr>& x, const std::optional<TypePtr>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || type_eq(*x, *y);
  };
  switch (a->kind) {
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Equal:
      return term_eq(a->s, b->s) && term_eq(a->t, b->t) && opt_sort_eq(a->eq_sort, b->eq_sort);
    case Formula::Kind::KleeneEq:
    case Formula::Kind::FRel:
      return term_eq(a->s, b->s) && term_eq(a->t, b->t);
    case Formula::Kind::Defined:
      return term_eq(a->s, b->s);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return formula_eq(a->l, b->l) && formula_eq(a->r, b->r);
    case Formula::Kind::Not:
      return formula_eq(a->l, b->l);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return a->var == b->var && opt_sort_eq(a->sort, b->sort) && formula_eq(a->l, b->l);
    case Formula::Kind::Guard: {
      if (a->guard != b->guard || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_eq(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Free variables
// ---------------------------------------------------------------------------

namespace {

void fv_term(const TermPtr& t, const VarSet& bound, VarSet& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      return;
    case Term::Kind::Comb:
    case Term::Kind::Oracle:
    case Term::Kind::Zero:
      return;
    case Term::Kind::SuccOf:
      fv_term(t->a, bound, out);
      return;
    case Term::Kind::Plus:
    case Term::Kind::Times:
    case Term::Kind::Apply:
      fv_term(t->a, bound, out);
      fv_term(t->b, bound, out);
      return;
    case Term::Kind::Lambda: {
      VarSet b2 = bound;
      b2.insert(t->var);
      fv_term(t->a, b2, out);
      return;
    }
  }
}

void fv_typed(const TypedPtr& t, const VarSet& bound, VarSet& out) {
  switch (t->kind) {
    case TypedTerm::Kind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      return;
    case TypedTerm::Kind::Apply:
      fv_typed(t->a, bound, out);
      fv_typed(t->b, bound, out);
      return;
    case TypedTerm::Kind::Lambda: {
      VarSet b2 = bound;
      b2.insert(t->var);
      fv_typed(t->a, b2, out);
      return;
    }
    default:
      return;
  }
}

void fv_formula(const FormulaPtr& f, const VarSet& bound, VarSet& out) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Equal:
    case Formula::Kind::KleeneEq:
    case Formula::Kind::FRel:
      fv_term(f->s, bound, out);
      fv_term(f->t, bound, out);
      return;
    case Formula::Kind::Defined:
      fv_term(f->s, bound, out);
      return;
    case Formula::Kind::Guard:
      for (const auto& a : f->args) fv_term(a, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      fv_formula(f->l, bound, out);
      fv_formula(f->r, bound, out);
      return;
    case Formula::Kind::Not:
      fv_formula(f->l, bound, out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      VarSet b2 = bound;
      b2.insert(f->var);
      fv_formula(f->l, b2, out);
      return;
    }
  }
}

void fv_term_ordered(const TermPtr& t, VarSet& bound, VarSet& seen, std::vector<Var>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->var) && !seen.count(t->var)) {
        seen.insert(t->var);
        out.push_back(t->var);
      }
      return;
    case Term::Kind::SuccOf:
      fv_term_ordered(t->a, bound, seen, out);
      return;
    case Term::Kind::Plus:
    case Term::Kind::Times:
    case Term::Kind::Apply:
      fv_term_ordered(t->a, bound, seen, out);
      fv_term_ordered(t->b, bound, seen, out);
      return;
    case Term::Kind::Lambda: {
      bool fresh = bound.insert(t->var).second;
      fv_term_ordered(t->a, bound, seen, out);
      if (fresh) bound.erase(t->var);
      return;
    }
    default:
      return;
  }
}

void fv_formula_ordered(const FormulaPtr& f, VarSet& bound, VarSet& seen, std::vector<Var>& out) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Equal:
    case Formula::Kind::KleeneEq:
    case Formula::Kind::FRel:
      fv_term_ordered(f->s, bound, seen, out);
      fv_term_ordered(f->t, bound, seen, out);
      return;
    case Formula::Kind::Defined:
      fv_term_ordered(f->s, bound, seen, out);
      return;
    case Formula::Kind::Guard:
      for (const auto& a : f->args) fv_term_ordered(a, bound, seen, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      fv_formula_ordered(f->l, bound, seen, out);
      fv_formula_ordered(f->r, bound, seen, out);
      return;
    case Formula::Kind::Not:
      fv_formula_ordered(f->l, bound, seen, out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->var).second;
      fv_formula_ordered(f->l, bound, seen, out);
      if (fresh) bound.erase(f->var);
      return;
    }
  }
}

}  // namespace

VarSet free_vars(const TermPtr& t) {
  VarSet out;
  fv_term(t, {}, out);
  return out;
}

VarSet free_vars(const TypedPtr& t) {
  VarSet out;
  fv_typed(t, {}, out);
  return out;
}

VarSet free_vars(const FormulaPtr& f) {
  VarSet out;
  fv_formula(f, {}, out);
  return out;
}

std::vector<Var> free_vars_ordered(const FormulaPtr& f) {
  VarSet bound, seen;
  std::vector<Var> out;
  fv_formula_ordered(f, bound, seen, out);
  return out;
}

std::vector<Var> free_vars_ordered(const TermPtr& t) {
  VarSet bound, seen;
  std::vector<Var> out;
  fv_term_ordered(t, bound, seen, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

namespace {

TermPtr rename_bound(const TermPtr& body, const Var& from, const Var& to) {
  return substitute(body, from, t_var(to));
}

FormulaPtr rename_bound(const FormulaPtr& body, const Var& from, const Var& to) {
  return substitute(body, from, t_var(to));
}

}  // namespace

TermPtr substitute(const TermPtr& target, const Var& x, const TermPtr& s) {
  switch (target->kind) {
    case Term::Kind::Var:
      return target->var == x ? s : target;
    case Term::Kind::Comb:
    case Term::Kind::Oracle:
    case Term::Kind::Zero:
      return target;
    case Term::Kind::SuccOf:
      return t_succ_of(substitute(target->a, x, s));
    case Term::Kind::Plus:
      return t_plus(substitute(target->a, x, s), substitute(target->b, x, s));
    case Term::Kind::Times:
      return t_times(substitute(target->a, x, s), substitute(target->b, x, s));
    case Term::Kind::Apply:
      return t_apply(substitute(target->a, x, s), substitute(target->b, x, s));
    case Term::Kind::Lambda: {
      if (target->var == x) return target;
      VarSet fv_s = free_vars(s);
      if (fv_s.count(target->var) && free_vars(target).count(x)) {
        VarSet avoid = free_vars(target->a);
        avoid.insert(fv_s.begin(), fv_s.end());
        avoid.insert(x);
        Var nv = fresh_var(target->var, avoid);
        TermPtr body = rename_bound(target->a, target->var, nv);
        return t_lambda(nv, substitute(body, x, s));
      }
      return t_lambda(target->var, substitute(target->a, x, s));
    }
  }
  throw SyntaxError("substitute: malformed term");
}

FormulaPtr substitute(const FormulaPtr& target, const Var& x, const TermPtr& s) {
  auto sub = [&](const TermPtr& t) { return substitute(t, x, s); };
  switch (target->kind) {
    case Formula::Kind::Bottom:
      return target;
    case Formula::Kind::Equal: {
      if (target->eq_sort) return f_equal_sorted(sub(target->s), sub(target->t), *target->eq_sort);
      return f_equal(sub(target->s), sub(target->t));
    }
    case Formula::Kind::KleeneEq:
      return f_kleene_eq(sub(target->s), sub(target->t));
    case Formula::Kind::FRel:
      return f_frel(sub(target->s), sub(target->t));
    case Formula::Kind::Defined:
      return f_defined(sub(target->s));
    case Formula::Kind::Guard: {
      std::vector<TermPtr> args;
      args.reserve(target->args.size());
      for (const auto& a : target->args) args.push_back(sub(a));
      return f_guard(target->guard, std::move(args));
    }
    case Formula::Kind::And:
      return f_and(substitute(target->l, x, s), substitute(target->r, x, s));
    case Formula::Kind::Or:
      return f_or(substitute(target->l, x, s), substitute(target->r, x, s));
    case Formula::Kind::Implies:
      return f_implies(substitute(target->l, x, s), substitute(target->r, x, s));
    case Formula::Kind::Not:
      return f_not(substitute(target->l, x, s));
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      bool all = target->kind == Formula::Kind::ForAll;
      if (target->var == x) return target;
      Var binder = target->var;
      FormulaPtr body = target->l;
      VarSet fv_s = free_vars(s);
      if (fv_s.count(binder) && free_vars(target).count(x)) {
        VarSet avoid = free_vars(body);
        avoid.insert(fv_s.begin(), fv_s.end());
        avoid.insert(x);
        Var nv = fresh_var(binder, avoid);
        body = rename_bound(body, binder, nv);
        binder = nv;
      }
      body = substitute(body, x, s);
      if (target->sort)
        return all ? f_forall_sorted(binder, *target->sort, body)
                   : f_exists_sorted(binder, *target->sort, body);
      return all ? f_forall(binder, body) : f_exists(binder, body);
    }
  }
  throw SyntaxError("substitute: malformed formula");
}

TypedPtr substitute(const TypedPtr& target, const Var& x, const TypedPtr& s) {
  switch (target->kind) {
    case TypedTerm::Kind::Var:
      if (target->var == x) {
        if (!type_eq(target->ty1, type_of(s)))
          throw TypeError("typed substitution: type mismatch for " + print_var(x) +
                          ": expected " + print_type(target->ty1) + ", got " +
                          print_type(type_of(s)));
        return s;
      }
      return target;
    case TypedTerm::Kind::Apply:
      return tt_apply(substitute(target->a, x, s), substitute(target->b, x, s));
    case TypedTerm::Kind::Lambda: {
      if (target->var == x) return target;
      VarSet fv_s = free_vars(s);
      if (fv_s.count(target->var) && free_vars(target).count(x)) {
        VarSet avoid = free_vars(target->a);
        avoid.insert(fv_s.begin(), fv_s.end());
        avoid.insert(x);
        Var nv = fresh_var(target->var, avoid);
        TypedPtr body = substitute(target->a, target->var, tt_var(nv, target->ty1));
        return tt_lambda(nv, target->ty1, substitute(body, x, s));
      }
      return tt_lambda(target->var, target->ty1, substitute(target->a, x, s));
    }
    default:
      return target;
  }
}

// ---------------------------------------------------------------------------
// Alpha equivalence
// ---------------------------------------------------------------------------

namespace {

using VarMap = std::map<Var, Var>;

bool alpha_term(const TermPtr& a, const TermPtr& b, VarMap& ab, VarMap& ba);

bool alpha_var(const Var& x, const Var& y, VarMap& ab, VarMap& ba) {
  auto i = ab.find(x);
  auto j = ba.find(y);
  if (i == ab.end() && j == ba.end()) return x == y;
  if (i == ab.end() || j == ba.end()) return false;
  return i->second == y && j->second == x;
}

template <typename Body, typename Rec>
bool alpha_binder(const Var& va, const Var& vb, const Body& ba_body, const Body& bb_body,
                  VarMap& ab, VarMap& ba, Rec rec) {
  auto oa = ab.find(va);
  auto ob = ba.find(vb);
  std::optional<Var> sa, sb;
  if (oa != ab.end()) sa = oa->second;
  if (ob != ba.end()) sb = ob->second;
  ab[va] = vb;
  ba[vb] = va;
  bool ok = rec(ba_body, bb_body, ab, ba);
  if (sa) ab[va] = *sa; else ab.erase(va);
  if (sb) ba[vb] = *sb; else ba.erase(vb);
  return ok;
}

bool alpha_term(const TermPtr& a, const TermPtr& b, VarMap& ab, VarMap& ba) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return alpha_var(a->var, b->var, ab, ba);
    case Term::Kind::Comb: return a->comb == b->comb;
    case Term::Kind::Oracle: return a->oracle_id == b->oracle_id;
    case Term::Kind::Zero: return true;
    case Term::Kind::SuccOf: return alpha_term(a->a, b->a, ab, ba);
    case Term::Kind::Plus:
    case Term::Kind::Times:
    case Term::Kind::Apply:
      return alpha_term(a->a, b->a, ab, ba) && alpha_term(a->b, b->b, ab, ba);
    case Term::Kind::Lambda:
      return alpha_binder(a->var, b->var, a->a, b->a, ab, ba,
                          [](const TermPtr& x, const TermPtr& y, VarMap& m1, VarMap& m2) {
                            return alpha_term(x, y, m1, m2);
                          });
  }
  return false;
}

bool alpha_formula(const FormulaPtr& a, const FormulaPtr& b, VarMap& ab, VarMap& ba) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Equal: {
      if (a->eq_sort.has_value() != b->eq_sort.has_value()) return false;
      if (a->eq_sort && !type_eq(*a->eq_sort, *b->eq_sort)) return false;
      return alpha_term(a->s, b->s, ab, ba) && alpha_term(a->t, b->t, ab, ba);
    }
    case Formula::Kind::KleeneEq:
    case Formula::Kind::FRel:
      return alpha_term(a->s, b->s, ab, ba) && alpha_term(a->t, b->t, ab, ba);
    case Formula::Kind::Defined:
      return alpha_term(a->s, b->s, ab, ba);
    case Formula::Kind::Guard: {
      if (a->guard != b->guard || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_term(a->args[i], b->args[i], ab, ba)) return false;
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_formula(a->l, b->l, ab, ba) && alpha_formula(a->r, b->r, ab, ba);
    case Formula::Kind::Not:
      return alpha_formula(a->l, b->l, ab, ba);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      if (a->sort.has_value() != b->sort.has_value()) return false;
      if (a->sort && !type_eq(*a->sort, *b->sort)) return false;
      return alpha_binder(a->var, b->var, a->l, b->l, ab, ba,
                          [](const FormulaPtr& x, const FormulaPtr& y, VarMap& m1, VarMap& m2) {
                            return alpha_formula(x, y, m1, m2);
                          });
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  VarMap ab, ba;
  return alpha_term(a, b, ab, ba);
}

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  VarMap ab, ba;
  return alpha_formula(a, b, ab, ba);
}

// ---------------------------------------------------------------------------
// Desugaring
// ---------------------------------------------------------------------------

FormulaPtr desugar(const FormulaPtr& f, const DesugarOptions& opt) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Equal:
    case Formula::Kind::FRel:
    case Formula::Kind::Guard:
      return f;
    case Formula::Kind::Defined:
      return f_equal(f->s, f->s);
    case Formula::Kind::KleeneEq: {
      // (s! | t!) -> s = t, with the disjunction subject to the same options
      FormulaPtr dis = f_or(f_equal(f->s, f->s), f_equal(f->t, f->t));
      return desugar(f_implies(dis, f_equal(f->s, f->t)), opt);
    }
    case Formula::Kind::Not:
      return f_implies(desugar(f->l, opt), f_bottom());
    case Formula::Kind::And:
      return f_and(desugar(f->l, opt), desugar(f->r, opt));
    case Formula::Kind::Or: {
      FormulaPtr l = desugar(f->l, opt);
      FormulaPtr r = desugar(f->r, opt);
      if (!opt.eliminate_or) return f_or(l, r);
      VarSet avoid = free_vars(l);
      VarSet fr = free_vars(r);
      avoid.insert(fr.begin(), fr.end());
      Var n = fresh_var(Var{"n", 0}, avoid);
      TermPtr nv = t_var(n);
      FormulaPtr left = f_implies(f_equal(nv, t_zero()), l);
      FormulaPtr right = f_implies(f_implies(f_equal(nv, t_zero()), f_bottom()), r);
      return f_exists(n, f_and(left, right));
    }
    case Formula::Kind::Implies:
      return f_implies(desugar(f->l, opt), desugar(f->r, opt));
    case Formula::Kind::ForAll: {
      FormulaPtr body = desugar(f->l, opt);
      return f->sort ? f_forall_sorted(f->var, *f->sort, body) : f_forall(f->var, body);
    }
    case Formula::Kind::Exists: {
      FormulaPtr body = desugar(f->l, opt);
      return f->sort ? f_exists_sorted(f->var, *f->sort, body) : f_exists(f->var, body);
    }
  }
  throw SyntaxError("desugar: malformed formula");
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

bool term_is_arithmetical(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Zero:
      return true;
    case Term::Kind::SuccOf:
      return term_is_arithmetical(t->a);
    case Term::Kind::Plus:
    case Term::Kind::Times:
      return term_is_arithmetical(t->a) && term_is_arithmetical(t->b);
    default:
      return false;
  }
}

namespace {

bool is_arithmetical(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Equal:
      return !f->eq_sort && term_is_arithmetical(f->s) && term_is_arithmetical(f->t);
    case Formula::Kind::Defined:
      return term_is_arithmetical(f->s);
    case Formula::Kind::KleeneEq:
      return term_is_arithmetical(f->s) && term_is_arithmetical(f->t);
    case Formula::Kind::FRel:
    case Formula::Kind::Guard:
      return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return is_arithmetical(f->l) && is_arithmetical(f->r);
    case Formula::Kind::Not:
      return is_arithmetical(f->l);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      if (f->sort && !is_ground(*f->sort)) return false;
      return is_arithmetical(f->l);
  }
  return false;
}

bool is_quantifier_free(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Equal:
      return !f->eq_sort;  // no equalities of higher type
    case Formula::Kind::Defined:
    case Formula::Kind::KleeneEq:
    case Formula::Kind::FRel:
    case Formula::Kind::Guard:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return is_quantifier_free(f->l) && is_quantifier_free(f->r);
    case Formula::Kind::Not:
      return is_quantifier_free(f->l);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return false;
  }
  return false;
}

}  // namespace

FormulaClass classify(const FormulaPtr& f) {
  if (is_arithmetical(f)) return FormulaClass::Arithmetical;
  if (is_quantifier_free(f)) return FormulaClass::QuantifierFree;
  return FormulaClass::Other;
}

const char* formula_class_name(FormulaClass c) {
  switch (c) {
    case FormulaClass::Arithmetical: return "arithmetical";
    case FormulaClass::QuantifierFree: return "quantifier_free";
    case FormulaClass::Other: return "other";
  }
  return "?";
}

bool formula_contains_or(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Or:
      return true;
    case Formula::Kind::KleeneEq:
      return true;  // expands through a disjunction
    case Formula::Kind::And:
    case Formula::Kind::Implies:
      return formula_contains_or(f->l) || formula_contains_or(f->r);
    case Formula::Kind::Not:
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return formula_contains_or(f->l);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Printing
//
// Term precedence, loosest first: lambda, + (left), x (left), application
// (left), S <atom>, atoms.  Formula precedence: quantifiers extend maximally
// right; => (right) < | (left) < & (left) < ~ < atoms.
// ---------------------------------------------------------------------------

namespace {

enum TermPrec { TP_LAMBDA = 0, TP_PLUS, TP_TIMES, TP_APPLY, TP_PREFIX, TP_ATOM };

int term_prec(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Lambda: return TP_LAMBDA;
    case Term::Kind::Plus: return TP_PLUS;
    case Term::Kind::Times: return TP_TIMES;
    case Term::Kind::Apply: return TP_APPLY;
    case Term::Kind::SuccOf: return term_numeral(t) ? TP_ATOM : TP_PREFIX;
    default: return TP_ATOM;
  }
}

void print_term_rec(std::ostringstream& out, const TermPtr& t, int min_prec);

void print_term_paren(std::ostringstream& out, const TermPtr& t, int prec, int min_prec) {
  if (prec < min_prec) {
    out << '(';
    print_term_rec(out, t, TP_LAMBDA);
    out << ')';
  } else {
    print_term_rec(out, t, min_prec);
  }
}

void print_term_rec(std::ostringstream& out, const TermPtr& t, int min_prec) {
  switch (t->kind) {
    case Term::Kind::Var:
      out << print_var(t->var);
      return;
    case Term::Kind::Comb:
      out << comb_name(t->comb);
      return;
    case Term::Kind::Oracle:
      out << t->oracle_id;
      return;
    case Term::Kind::Zero:
      out << '0';
      return;
    case Term::Kind::SuccOf: {
      if (auto n = term_numeral(t)) {
        out << *n;
        return;
      }
      if (TP_PREFIX < min_prec) {
        out << '(';
        print_term_rec(out, t, TP_LAMBDA);
        out << ')';
        return;
      }
      out << "S ";
      print_term_paren(out, t->a, term_prec(t->a), TP_ATOM);
      return;
    }
    case Term::Kind::Plus:
    case Term::Kind::Times: {
      bool plus = t->kind == Term::Kind::Plus;
      int prec = plus ? TP_PLUS : TP_TIMES;
      if (prec < min_prec) {
        out << '(';
        print_term_rec(out, t, TP_LAMBDA);
        out << ')';
        return;
      }
      print_term_paren(out, t->a, term_prec(t->a), prec);
      out << (plus ? " + " : " * ");
      print_term_paren(out, t->b, term_prec(t->b), prec + 1);
      return;
    }
    case Term::Kind::Apply: {
      if (TP_APPLY < min_prec) {
        out << '(';
        print_term_rec(out, t, TP_LAMBDA);
        out << ')';
        return;
      }
      print_term_paren(out, t->a, term_prec(t->a), TP_APPLY);
      out << ' ';
      print_term_paren(out, t->b, term_prec(t->b), TP_ATOM);
      return;
    }
    case Term::Kind::Lambda: {
      if (TP_LAMBDA < min_prec) {
        out << '(';
        print_term_rec(out, t, TP_LAMBDA);
        out << ')';
        return;
      }
      out << '\\' << print_var(t->var) << ". ";
      print_term_rec(out, t->a, TP_LAMBDA);
      return;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream out;
  print_term_rec(out, t, TP_LAMBDA);
  return out.str();
}

namespace {

void print_typed_rec(std::ostringstream& out, const TypedPtr& t, bool app_arg) {
  switch (t->kind) {
    case TypedTerm::Kind::Var:
      out << print_var(t->var) << ":(" << print_type(t->ty1) << ')';
      return;
    case TypedTerm::Kind::K:
      out << "K[" << print_type(t->ty1) << ',' << print_type(t->ty2) << ']';
      return;
    case TypedTerm::Kind::S:
      out << "S[" << print_type(t->ty1) << ',' << print_type(t->ty2) << ','
          << print_type(t->ty3) << ']';
      return;
    case TypedTerm::Kind::P:
      out << "P[" << print_type(t->ty1) << ',' << print_type(t->ty2) << ']';
      return;
    case TypedTerm::Kind::P0:
      out << "P0[" << print_type(t->ty1) << ',' << print_type(t->ty2) << ']';
      return;
    case TypedTerm::Kind::P1:
      out << "P1[" << print_type(t->ty1) << ',' << print_type(t->ty2) << ']';
      return;
    case TypedTerm::Kind::Zero:
      out << '0';
      return;
    case TypedTerm::Kind::Succ:
      out << 'S';
      return;
    case TypedTerm::Kind::Recursor:
      out << "R[" << print_type(t->ty1) << ']';
      return;
    case TypedTerm::Kind::EqTest:
      out << "E[" << print_type(t->ty1) << ']';
      return;
    case TypedTerm::Kind::Apply: {
      if (app_arg) out << '(';
      bool fn_parens = t->a->kind == TypedTerm::Kind::Lambda;
      if (fn_parens) out << '(';
      print_typed_rec(out, t->a, false);
      if (fn_parens) out << ')';
      out << ' ';
      print_typed_rec(out, t->b, true);
      if (app_arg) out << ')';
      return;
    }
    case TypedTerm::Kind::Lambda: {
      if (app_arg) out << '(';
      out << '\\' << print_var(t->var) << ":(" << print_type(t->ty1) << "). ";
      print_typed_rec(out, t->a, false);
      if (app_arg) out << ')';
      return;
    }
  }
}

}  // namespace

std::string print_typed(const TypedPtr& t) {
  std::ostringstream out;
  print_typed_rec(out, t, false);
  return out.str();
}

namespace {

enum FormulaPrec { FP_QUANT = 0, FP_IMPLIES, FP_OR, FP_AND, FP_NOT, FP_ATOM };

int formula_prec(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return FP_QUANT;
    case Formula::Kind::Implies: return FP_IMPLIES;
    case Formula::Kind::Or: return FP_OR;
    case Formula::Kind::And: return FP_AND;
    case Formula::Kind::Not: return FP_NOT;
    default: return FP_ATOM;
  }
}

void print_formula_rec(std::ostringstream& out, const FormulaPtr& f, int min_prec);

void print_formula_paren(std::ostringstream& out, const FormulaPtr& f, int min_prec) {
  if (formula_prec(f) < min_prec) {
    out << '(';
    print_formula_rec(out, f, FP_QUANT);
    out << ')';
  } else {
    print_formula_rec(out, f, min_prec);
  }
}

// The operand of ! and the sides of =/~= print at application precedence;
// anything looser gets parentheses.
void print_atom_term(std::ostringstream& out, const TermPtr& t) {
  print_term_paren(out, t, term_prec(t), TP_PLUS);
}

void print_formula_rec(std::ostringstream& out, const FormulaPtr& f, int min_prec) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      out << "_|_";
      return;
    case Formula::Kind::Equal:
      print_atom_term(out, f->s);
      if (f->eq_sort) {
        out << " ={" << print_type(*f->eq_sort) << "} ";
      } else {
        out << " = ";
      }
      print_atom_term(out, f->t);
      return;
    case Formula::Kind::KleeneEq:
      print_atom_term(out, f->s);
      out << " ~= ";
      print_atom_term(out, f->t);
      return;
    case Formula::Kind::Defined:
      out << '!';
      print_term_paren(out, f->s, term_prec(f->s), TP_APPLY);
      return;
    case Formula::Kind::FRel:
      out << "F(";
      print_term_rec(out, f->s, TP_LAMBDA);
      out << ", ";
      print_term_rec(out, f->t, TP_LAMBDA);
      out << ')';
      return;
    case Formula::Kind::Guard: {
      switch (f->guard) {
        case GuardKind::Cond: out << "Cond("; break;
        case GuardKind::Ext: out << "Ext("; break;
        case GuardKind::Mem: out << "In("; break;
      }
      for (size_t i = 0; i < f->args.size(); ++i) {
        if (i) out << ", ";
        print_term_rec(out, f->args[i], TP_LAMBDA);
      }
      out << ')';
      return;
    }
    case Formula::Kind::Not: {
      if (FP_NOT < min_prec) {
        out << '(';
        print_formula_rec(out, f, FP_QUANT);
        out << ')';
        return;
      }
      out << '~';
      print_formula_paren(out, f->l, FP_ATOM);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool is_and = f->kind == Formula::Kind::And;
      int prec = is_and ? FP_AND : FP_OR;
      if (prec < min_prec) {
        out << '(';
        print_formula_rec(out, f, FP_QUANT);
        out << ')';
        return;
      }
      print_formula_paren(out, f->l, prec);
      out << (is_and ? " & " : " | ");
      print_formula_paren(out, f->r, prec + 1);
      return;
    }
    case Formula::Kind::Implies: {
      if (FP_IMPLIES < min_prec) {
        out << '(';
        print_formula_rec(out, f, FP_QUANT);
        out << ')';
        return;
      }
      print_formula_paren(out, f->l, FP_IMPLIES + 1);
      out << " => ";
      print_formula_paren(out, f->r, FP_IMPLIES);
      return;
    }
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      if (FP_QUANT < min_prec) {
        out << '(';
        print_formula_rec(out, f, FP_QUANT);
        out << ')';
        return;
      }
      out << (f->kind == Formula::Kind::ForAll ? "forall " : "exists ");
      out << print_var(f->var);
      if (f->sort) out << ':' << print_type(*f->sort);
      out << ". ";
      print_formula_rec(out, f->l, FP_QUANT);
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  print_formula_rec(out, f, FP_QUANT);
  return out.str();
}

}  // namespace hap
