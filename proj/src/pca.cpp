#include "hap/pca.hpp"

#include <sstream>

#include "hap/abstraction.hpp"

namespace hap {

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

ValuePtr v_num(std::uint64_t n) {
  Value v;
  v.kind = Value::Kind::Num;
  v.num = n;
  return std::make_shared<Value>(std::move(v));
}

ValuePtr v_pair(ValuePtr a, ValuePtr b) {
  Value v;
  v.kind = Value::Kind::Pair;
  v.first = std::move(a);
  v.second = std::move(b);
  return std::make_shared<Value>(std::move(v));
}

ValuePtr v_partial(Head h, std::vector<ValuePtr> args) {
  Value v;
  v.kind = Value::Kind::Partial;
  v.head = std::move(h);
  v.args = std::move(args);
  return std::make_shared<Value>(std::move(v));
}

ValuePtr v_comb(Comb c) { return v_partial(Head::of(c)); }

bool value_eq(const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Value::Kind::Num:
      return a->num == b->num;
    case Value::Kind::Pair:
      return value_eq(a->first, b->first) && value_eq(a->second, b->second);
    case Value::Kind::Partial: {
      if (!(a->head == b->head) || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!value_eq(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

TermPtr value_to_term(const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Num:
      return t_num(v->num);
    case Value::Kind::Pair:
      return t_apply(t_apply(t_comb(Comb::P), value_to_term(v->first)),
                     value_to_term(v->second));
    case Value::Kind::Partial: {
      TermPtr t = v->head.is_oracle ? t_oracle(v->head.oracle_id) : t_comb(v->head.comb);
      for (const auto& a : v->args) t = t_apply(std::move(t), value_to_term(a));
      return t;
    }
  }
  throw EvalError("value_to_term: malformed value");
}

std::string print_value(const ValuePtr& v) { return print_term(value_to_term(v)); }

std::optional<bool> kleene_agree(const Outcome& a, const Outcome& b) {
  if (a.kind == Outcome::Kind::OutOfFuel || b.kind == Outcome::Kind::OutOfFuel)
    return std::nullopt;
  if (a.defined() != b.defined()) return false;
  if (!a.defined()) return true;
  return value_eq(a.value, b.value);
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

namespace {

struct OutOfFuelEx {};
struct UndefEx {
  Undef u;
};

struct Evaluator {
  std::uint64_t fuel;
  const OracleTable* oracles;
  TraceSink* trace;

  void spend(const char* rule, const ValuePtr& redex_head) {
    if (fuel == 0) throw OutOfFuelEx{};
    --fuel;
    if (trace && trace->on_step)
      trace->on_step(rule, redex_head ? print_value(redex_head) : std::string(), fuel);
  }

  void spend_term(const char* rule, const std::string& redex) {
    if (fuel == 0) throw OutOfFuelEx{};
    --fuel;
    if (trace && trace->on_step) trace->on_step(rule, redex, fuel);
  }

  [[noreturn]] void stuck(std::string what) {
    throw UndefEx{Undef{Undef::Why::Stuck, std::move(what)}};
  }

  std::uint64_t need_num(const ValuePtr& v, const char* where) {
    if (v->kind != Value::Kind::Num) stuck(std::string(where) + " applied to " + print_value(v));
    return v->num;
  }

  ValuePtr apply(const ValuePtr& f, const ValuePtr& a) {
    if (f->kind != Value::Kind::Partial)
      stuck("applying a non-function: " + print_value(f));
    std::vector<ValuePtr> args = f->args;
    args.push_back(a);
    if (static_cast<int>(args.size()) < f->head.arity())
      return v_partial(f->head, std::move(args));
    if (f->head.is_oracle) return query(f->head.oracle_id, args[0]);
    return fire(f->head.comb, args, f);
  }

  ValuePtr fire(Comb c, const std::vector<ValuePtr>& a, const ValuePtr& fval) {
    switch (c) {
      case Comb::K:
        spend("k", fval);
        return a[0];
      case Comb::S: {
        spend("s", fval);
        ValuePtr xz = apply(a[0], a[2]);
        ValuePtr yz = apply(a[1], a[2]);
        return apply(xz, yz);
      }
      case Comb::P:
        spend("p", fval);
        return v_pair(a[0], a[1]);
      case Comb::P0:
        spend("p0", fval);
        return a[0]->kind == Value::Kind::Pair ? a[0]->first : a[0];
      case Comb::P1:
        spend("p1", fval);
        return a[0]->kind == Value::Kind::Pair ? a[0]->second : a[0];
      case Comb::Succ: {
        spend("succ", fval);
        return v_num(need_num(a[0], "succ") + 1);
      }
      case Comb::R: {
        std::uint64_t n = need_num(a[2], "r");
        if (n == 0) {
          spend("r-zero", fval);
          return a[0];
        }
        ValuePtr acc = a[0];
        for (std::uint64_t k = 0; k < n; ++k) {
          spend("r-succ", fval);
          acc = apply(apply(a[1], v_num(k)), acc);
        }
        return acc;
      }
    }
    stuck("unknown combinator");
  }

  ValuePtr query(const std::string& id, const ValuePtr& arg) {
    if (fuel == 0) throw OutOfFuelEx{};
    --fuel;
    std::optional<ValuePtr> ans;
    if (oracles && oracles->has(id)) ans = oracles->fns.at(id)(arg);
    if (trace && trace->on_query)
      trace->on_query(id, print_value(arg),
                      ans ? std::optional<std::string>(print_value(*ans)) : std::nullopt);
    if (!ans)
      throw UndefEx{Undef{Undef::Why::OracleDeclined, id + " at " + print_value(arg)}};
    return *ans;
  }

  ValuePtr eval(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var:
        throw EvalError("eval: open term (free " + print_var(t->var) + ")");
      case Term::Kind::Lambda:
        throw EvalError("eval: lambda sugar must be eliminated before evaluation");
      case Term::Kind::Comb:
        return v_comb(t->comb);
      case Term::Kind::Oracle:
        return v_partial(Head::oracle(t->oracle_id));
      case Term::Kind::Zero:
        return v_num(0);
      case Term::Kind::SuccOf: {
        ValuePtr a = eval(t->a);
        spend_term("S", print_term(t));
        if (a->kind != Value::Kind::Num) stuck("S of " + print_value(a));
        return v_num(a->num + 1);
      }
      case Term::Kind::Plus: {
        ValuePtr a = eval(t->a);
        ValuePtr b = eval(t->b);
        spend_term("+", print_term(t));
        if (a->kind != Value::Kind::Num || b->kind != Value::Kind::Num)
          stuck("+ of " + print_value(a) + " and " + print_value(b));
        return v_num(a->num + b->num);
      }
      case Term::Kind::Times: {
        ValuePtr a = eval(t->a);
        ValuePtr b = eval(t->b);
        spend_term("*", print_term(t));
        if (a->kind != Value::Kind::Num || b->kind != Value::Kind::Num)
          stuck("* of " + print_value(a) + " and " + print_value(b));
        return v_num(a->num * b->num);
      }
      case Term::Kind::Apply: {
        ValuePtr f = eval(t->a);
        ValuePtr x = eval(t->b);
        return apply(f, x);
      }
    }
    throw EvalError("eval: malformed term");
  }
};

Outcome run_eval(const EvalOptions& opt, const std::function<ValuePtr(Evaluator&)>& body) {
  Evaluator ev{opt.fuel, opt.oracles, opt.trace};
  try {
    ValuePtr v = body(ev);
    return Outcome::ok(std::move(v), opt.fuel - ev.fuel);
  } catch (const OutOfFuelEx&) {
    return Outcome::out_of_fuel(opt.fuel);
  } catch (const UndefEx& u) {
    return Outcome::undefined(u.u, opt.fuel - ev.fuel);
  }
}

}  // namespace

Outcome eval(const TermPtr& t, const EvalOptions& opt) {
  return run_eval(opt, [&](Evaluator& ev) { return ev.eval(t); });
}

Outcome apply_values(const ValuePtr& f, const ValuePtr& a, const EvalOptions& opt) {
  return run_eval(opt, [&](Evaluator& ev) { return ev.apply(f, a); });
}

// ---------------------------------------------------------------------------
// Standard library
// ---------------------------------------------------------------------------

namespace {

std::map<std::string, TermPtr> build_stdlib() {
  Var x{"x", 0}, y{"y", 0}, z{"z", 0}, u{"u", 0}, v{"v", 0}, n{"n", 0};
  auto vx = t_var(x), vy = t_var(y), vz = t_var(z), vu = t_var(u), vv = t_var(v), vn = t_var(n);
  auto rr = t_comb(Comb::R);
  auto sc = t_comb(Comb::Succ);

  std::map<std::string, TermPtr> lib;

  // plus := \x y. r x (\u v. succ v) y
  TermPtr plus = eliminate_lambdas(
      lam({x, y}, t_apply_all(rr, {vx, lam({u, v}, t_apply(sc, vv)), vy})));
  lib["plus"] = plus;

  // times := \x y. r 0 (\u v. plus v x) y
  lib["times"] = eliminate_lambdas(
      lam({x, y}, t_apply_all(rr, {t_zero(), lam({u, v}, t_apply_all(plus, {vv, vx})), vy})));

  // pred := \n. r 0 (\u v. u) n
  TermPtr pred =
      eliminate_lambdas(lam({n}, t_apply_all(rr, {t_zero(), lam({u, v}, vu), vn})));
  lib["pred"] = pred;

  // monus := \x y. r x (\u v. pred v) y
  TermPtr monus = eliminate_lambdas(
      lam({x, y}, t_apply_all(rr, {vx, lam({u, v}, t_apply(pred, vv)), vy})));
  lib["monus"] = monus;

  // iszero := \n. r 0 (\u v. 1) n    (0 iff n = 0, else 1)
  TermPtr iszero = eliminate_lambdas(
      lam({n}, t_apply_all(rr, {t_zero(), lam({u, v}, t_num(1)), vn})));
  lib["iszero"] = iszero;

  // e := \x y. iszero (plus (monus x y) (monus y x))
  lib["e"] = eliminate_lambdas(lam(
      {x, y},
      t_apply(iszero, t_apply_all(plus, {t_apply_all(monus, {vx, vy}),
                                         t_apply_all(monus, {vy, vx})}))));

  // top := k, bot := \x y. y, d := \x y z. x y z
  lib["top"] = t_comb(Comb::K);
  lib["bot"] = eliminate_lambdas(lam({x, y}, vy));
  lib["d"] = eliminate_lambdas(lam({x, y, z}, t_apply_all(vx, {vy, vz})));

  return lib;
}

}  // namespace

const std::map<std::string, TermPtr>& stdlib() {
  static const std::map<std::string, TermPtr> lib = build_stdlib();
  return lib;
}

TermPtr stdlib_term(const std::string& name) {
  const auto& lib = stdlib();
  auto it = lib.find(name);
  if (it == lib.end()) throw EvalError("stdlib: no term named " + name);
  return it->second;
}

ValuePtr stdlib_value(const std::string& name) {
  static std::map<std::string, ValuePtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  Outcome out = eval(stdlib_term(name));
  if (!out.defined()) throw EvalError("stdlib: " + name + " failed to evaluate");
  cache[name] = out.value;
  return out.value;
}

// ---------------------------------------------------------------------------
// Sequence and tuple coding
// ---------------------------------------------------------------------------

ValuePtr encode_seq(const std::vector<ValuePtr>& vs) {
  ValuePtr chain = v_num(0);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) chain = v_pair(*it, std::move(chain));
  return v_pair(v_num(vs.size()), std::move(chain));
}

std::optional<std::vector<ValuePtr>> decode_seq(const ValuePtr& v) {
  if (v->kind != Value::Kind::Pair) return std::nullopt;
  if (v->first->kind != Value::Kind::Num) return std::nullopt;
  std::uint64_t n = v->first->num;
  std::vector<ValuePtr> out;
  ValuePtr cur = v->second;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (cur->kind != Value::Kind::Pair) return std::nullopt;
    out.push_back(cur->first);
    cur = cur->second;
  }
  if (cur->kind != Value::Kind::Num || cur->num != 0) return std::nullopt;
  return out;
}

ValuePtr seq_concat(const ValuePtr& u, const ValuePtr& v) {
  auto du = decode_seq(u), dv = decode_seq(v);
  if (!du || !dv) throw EvalError("seq_concat: not a coded sequence");
  du->insert(du->end(), dv->begin(), dv->end());
  return encode_seq(*du);
}

ValuePtr seq_prefix(const ValuePtr& u, std::uint64_t i) {
  auto du = decode_seq(u);
  if (!du) throw EvalError("seq_prefix: not a coded sequence");
  if (i > du->size()) throw EvalError("seq_prefix: prefix longer than the sequence");
  du->resize(i);
  return encode_seq(*du);
}

ValuePtr encode_tuple(const std::vector<ValuePtr>& vs) {
  if (vs.empty()) return v_num(0);
  ValuePtr acc = vs.back();
  for (auto it = vs.rbegin() + 1; it != vs.rend(); ++it) acc = v_pair(*it, std::move(acc));
  return acc;
}

std::optional<std::vector<ValuePtr>> decode_tuple(const ValuePtr& v, size_t arity) {
  std::vector<ValuePtr> out;
  if (arity == 0) {
    if (v->kind == Value::Kind::Num && v->num == 0) return out;
    return std::nullopt;
  }
  ValuePtr cur = v;
  for (size_t i = 0; i + 1 < arity; ++i) {
    if (cur->kind != Value::Kind::Pair) return std::nullopt;
    out.push_back(cur->first);
    cur = cur->second;
  }
  out.push_back(cur);
  return out;
}

TermPtr tuple_term(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return t_zero();
  TermPtr acc = ts.back();
  for (auto it = ts.rbegin() + 1; it != ts.rend(); ++it)
    acc = t_apply(t_apply(t_comb(Comb::P), *it), std::move(acc));
  return acc;
}

// ---------------------------------------------------------------------------
// Dialogue application
// ---------------------------------------------------------------------------

Outcome dialogue_apply(const ValuePtr& a, const ValuePtr& b, const OracleFn& f,
                       const EvalOptions& opt) {
  std::uint64_t remaining = opt.fuel;
  std::vector<ValuePtr> transcript;  // the answers u_0, ..., u_{i-1}
  const ValuePtr top = stdlib_value("top");
  const ValuePtr bot = stdlib_value("bot");

  for (;;) {
    if (remaining == 0) return Outcome::out_of_fuel(opt.fuel);
    --remaining;  // one stage

    std::vector<ValuePtr> stage_seq;
    stage_seq.push_back(b);
    stage_seq.insert(stage_seq.end(), transcript.begin(), transcript.end());
    ValuePtr s = encode_seq(stage_seq);

    EvalOptions inner = opt;
    inner.fuel = remaining;
    Outcome out = apply_values(a, s, inner);
    if (out.kind == Outcome::Kind::OutOfFuel) return Outcome::out_of_fuel(opt.fuel);
    remaining -= out.fuel_used;
    if (out.kind == Outcome::Kind::Undefined)
      return Outcome::undefined(out.undef, opt.fuel - remaining);

    const ValuePtr& res = out.value;
    if (res->kind != Value::Kind::Pair)
      return Outcome::undefined(
          Undef{Undef::Why::Stuck, "dialogue stage produced " + print_value(res)},
          opt.fuel - remaining);
    if (value_eq(res->first, top))
      return Outcome::ok(res->second, opt.fuel - remaining);
    if (!value_eq(res->first, bot))
      return Outcome::undefined(
          Undef{Undef::Why::Stuck, "dialogue stage tag is neither top nor bot"},
          opt.fuel - remaining);

    if (remaining == 0) return Outcome::out_of_fuel(opt.fuel);
    --remaining;  // one oracle query
    std::optional<ValuePtr> ans = f(res->second);
    if (!ans)
      return Outcome::undefined(
          Undef{Undef::Why::OracleDeclined, "dialogue query at " + print_value(res->second)},
          opt.fuel - remaining);
    transcript.push_back(*ans);
  }
}

}  // namespace hap
