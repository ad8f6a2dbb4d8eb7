#ifndef HAP_PARSE_HPP
#define HAP_PARSE_HPP

#include <map>
#include <string>

#include "hap/syntax.hpp"

// Text frontend for the shared grammar.  Application is juxtaposition and
// associates left; `\x. t` is abstraction sugar; `!t` definedness; `~=`
// Kleene equality; types are written 0, s->t, s*t.  print and parse are
// mutually inverse on parse trees.

namespace hap {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

TypePtr parse_type(const std::string& src);
TermPtr parse_term(const std::string& src);
FormulaPtr parse_formula(const std::string& src);

// Typed terms; env supplies types for unannotated free variables.
using TypeEnv = std::map<Var, TypePtr>;
TypedPtr parse_typed_term(const std::string& src, const TypeEnv& env = {});

// Choice constants are self-describing: the id carries the argument tuple,
// the witness variable and the formula, in the term grammar itself, e.g.
//   eps[x;y](exists m. m = S x)
struct EpsilonSpec {
  std::vector<Var> args;  // canonical order of the coded tuple
  Var witness;
  FormulaPtr phi;
};

std::string make_epsilon_id(const EpsilonSpec& spec);
// Recovers the spec from an id in the eps[...](...) form; nullopt otherwise.
std::optional<EpsilonSpec> parse_epsilon_id(const std::string& id);

TermPtr t_epsilon(const EpsilonSpec& spec);  // the oracle constant term

}  // namespace hap

#endif
