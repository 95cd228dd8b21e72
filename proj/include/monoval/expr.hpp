// Expression parsing and deterministic printing.
//
// Grammar:
//   ratfn    := expr ('/' expr)?          (at most one '/' at paren depth 0)
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' nat)?
//   atom     := rational | ident | '(' expr ')'
//   rational := int ('/' nat)?            (the '/' form only inside parens)
//   ident    := [A-Za-z][A-Za-z0-9_]*
//
// At paren depth 0 a '/' always separates numerator and denominator, so
// "3/4*x" is the rational function 3/(4*x); a literal coefficient must be
// parenthesized, "(3/4)*x". A leading '-' is accepted where an atom is
// expected. The printers emit exactly this dialect, so printing round-trips.
#pragma once

#include <string>
#include <vector>

#include "monoval/exactvalue.hpp"
#include "monoval/polyring.hpp"
#include "monoval/residue.hpp"

namespace monoval {

struct ParsedExpr {
  Poly num;
  Poly den;
  bool is_ratfn;  // a top-level '/' was present

  RatFn ratfn() const { return RatFn(num, den); }
};

/// Throws ParseError with a 0-based offset on malformed input or unknown
/// identifiers.
ParsedExpr parse_expr(const std::string& text, const std::vector<std::string>& variables);

std::string poly_to_string(const Poly& f, const std::vector<std::string>& variables);
std::string ratfn_to_string(const RatFn& f, const std::vector<std::string>& variables);
std::string parsed_to_string(const ParsedExpr& e, const std::vector<std::string>& variables);
std::string residue_to_string(const ResidueElement& e);

}  // namespace monoval
