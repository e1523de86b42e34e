#ifndef APOLAR_PARSE_HPP
#define APOLAR_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Parse tree of the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := var | rational | '(' expr ')'
struct Expr {
  enum class Kind { Sum, Product, Power, Variable, Literal, Generator };
  Kind kind = Kind::Literal;
  std::vector<Expr> children;
  std::vector<bool> negated;  // Sum only, one flag per child
  unsigned exponent = 0;      // Power only
  std::string name;           // Variable / Generator
  Rational value;             // Literal
  std::size_t position = 0;   // offset in the source text
};

struct ParseOptions {
  std::optional<VarSet> vars;  // declared order; otherwise first occurrence
  FieldRef ext;                // identifiers equal to its generator are scalars
  Role role = Role::S;         // in the T role "X0" also resolves to "x0"
  bool require_homogeneous = false;
};

Expr parse_expr(std::string_view text, const FieldRef& ext = nullptr);
Poly parse_poly(std::string_view text, const ParseOptions& opts = {});
/// Comma-separated forms over a fixed VarSet.
std::vector<Poly> parse_poly_list(std::string_view text, const ParseOptions& opts);

/// "z: z^2+z+1"
FieldRef parse_extension(std::string_view decl);
/// A scalar expression built from rationals and the extension generator.
FieldElement parse_scalar(std::string_view text, const FieldRef& ext);
/// Points separated by ';', coordinates by ','.
std::vector<Point> parse_points(std::string_view text, std::size_t nvars, const FieldRef& ext);

}  // namespace apolar

#endif
