#ifndef HAP_PCA_HPP
#define HAP_PCA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hap/syntax.hpp"

// Executable partial combinatory algebra: fuel-bounded call-by-value
// evaluation of closed untyped terms, with oracle constants and dialogue
// application.
//
// Evaluation order is leftmost-innermost; combinators reduce only at full
// arity.  Arithmetic (S, +, x, succ, r) is strict in numerals; applying a
// numeral or a pair, or feeding a non-numeral to a numeric position, gets
// stuck and reports Undefined.  Projections are total: on non-pairs they
// return the value unchanged.

namespace hap {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Head of a partial application: a combinator or an oracle constant.
struct Head {
  bool is_oracle = false;
  Comb comb = Comb::K;
  std::string oracle_id;

  static Head of(Comb c) { return Head{false, c, {}}; }
  static Head oracle(std::string id) { return Head{true, Comb::K, std::move(id)}; }
  int arity() const { return is_oracle ? 1 : comb_arity(comb); }
  std::string name() const { return is_oracle ? oracle_id : comb_name(comb); }
  bool operator==(const Head& o) const {
    return is_oracle == o.is_oracle &&
           (is_oracle ? oracle_id == o.oracle_id : comb == o.comb);
  }
};

struct Value {
  enum class Kind { Num, Pair, Partial };
  Kind kind;
  std::uint64_t num = 0;          // Num
  ValuePtr first, second;         // Pair
  Head head;                      // Partial
  std::vector<ValuePtr> args;     // Partial; size < head.arity()
};

ValuePtr v_num(std::uint64_t n);
ValuePtr v_pair(ValuePtr a, ValuePtr b);
ValuePtr v_partial(Head h, std::vector<ValuePtr> args = {});
ValuePtr v_comb(Comb c);

bool value_eq(const ValuePtr& a, const ValuePtr& b);
std::string print_value(const ValuePtr& v);
// Closed term whose evaluation yields exactly this value.
TermPtr value_to_term(const ValuePtr& v);

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

struct Undef {
  enum class Why { OracleDeclined, Stuck };
  Why why;
  std::string witness;  // oracle id + argument, or a description of the stuck redex
};

struct Outcome {
  enum class Kind { Defined, Undefined, OutOfFuel };
  Kind kind;
  ValuePtr value;            // Defined
  Undef undef;               // Undefined
  std::uint64_t fuel_used = 0;

  bool defined() const { return kind == Kind::Defined; }
  static Outcome ok(ValuePtr v, std::uint64_t fuel) {
    return Outcome{Kind::Defined, std::move(v), {}, fuel};
  }
  static Outcome undefined(Undef u, std::uint64_t fuel) {
    return Outcome{Kind::Undefined, nullptr, std::move(u), fuel};
  }
  static Outcome out_of_fuel(std::uint64_t fuel) {
    return Outcome{Kind::OutOfFuel, nullptr, {}, fuel};
  }
};

// Kleene equality of outcomes: both defined with equal values, or neither
// defined.  OutOfFuel on either side is inconclusive (nullopt).
std::optional<bool> kleene_agree(const Outcome& a, const Outcome& b);

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

// Partial functions on values; nullopt = the oracle declines.
using OracleFn = std::function<std::optional<ValuePtr>(const ValuePtr&)>;

struct OracleTable {
  std::map<std::string, OracleFn> fns;

  bool has(const std::string& id) const { return fns.count(id) != 0; }
  void set(std::string id, OracleFn fn) { fns[std::move(id)] = std::move(fn); }
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultFuel = 100000;

struct TraceSink {
  // One call per reduction: rule tag, printed redex, fuel remaining.
  std::function<void(const std::string& rule, const std::string& redex, std::uint64_t fuel)> on_step;
  // One call per oracle query; answer is nullopt on decline.
  std::function<void(const std::string& id, const std::string& arg,
                     const std::optional<std::string>& answer)> on_query;
};

struct EvalOptions {
  std::uint64_t fuel = kDefaultFuel;
  const OracleTable* oracles = nullptr;
  TraceSink* trace = nullptr;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluates a closed lambda-free term.  Throws EvalError on open input or
// leftover lambda sugar.
Outcome eval(const TermPtr& t, const EvalOptions& opt = {});

// Applies an already-evaluated value to another, under the same budget rules.
Outcome apply_values(const ValuePtr& f, const ValuePtr& a, const EvalOptions& opt = {});

// ---------------------------------------------------------------------------
// Standard library of closed terms, validated under eval by the test suite:
// plus, times, e (decidable equality), d (if-then-else), top, bot.
// ---------------------------------------------------------------------------

const std::map<std::string, TermPtr>& stdlib();
TermPtr stdlib_term(const std::string& name);
ValuePtr stdlib_value(const std::string& name);  // evaluated form, cached

// ---------------------------------------------------------------------------
// Sequence coding, shared bit-exactly across modules:
//   <u0,...,u_{n-1}>  :=  Pair(Num(n), Pair(u0, Pair(u1, ... Num(0))))
// ---------------------------------------------------------------------------

ValuePtr encode_seq(const std::vector<ValuePtr>& vs);
std::optional<std::vector<ValuePtr>> decode_seq(const ValuePtr& v);
ValuePtr seq_concat(const ValuePtr& u, const ValuePtr& v);     // u * v
ValuePtr seq_prefix(const ValuePtr& u, std::uint64_t i);       // u^{<i}

// Tuple coding for oracle arguments: () = 0, (a) = a, (a,b,...) right-nested
// pairs.  decode requires the declared arity.
ValuePtr encode_tuple(const std::vector<ValuePtr>& vs);
std::optional<std::vector<ValuePtr>> decode_tuple(const ValuePtr& v, size_t arity);
// Same coding at the term level.
TermPtr tuple_term(const std::vector<TermPtr>& ts);

// ---------------------------------------------------------------------------
// Dialogue application: a .f b, where the program a interrogates the
// partial function f through a growing transcript.
// ---------------------------------------------------------------------------

Outcome dialogue_apply(const ValuePtr& a, const ValuePtr& b, const OracleFn& f,
                       const EvalOptions& opt = {});

}  // namespace hap

#endif
