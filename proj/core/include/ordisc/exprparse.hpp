#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordisc/field.hpp"
#include "ordisc/multipoly.hpp"

namespace ordisc {

/// Names of the variables of a polynomial ring, by index.
struct VariableNames {
  std::vector<std::string> names;

  /// X1..Xn, Y
  static VariableNames xy(std::size_t n);
  /// A1..Ad
  static VariableNames a(std::size_t d);
  /// t
  static VariableNames t();

  std::size_t size() const { return names.size(); }
  /// Index of `name`, or SIZE_MAX.
  std::size_t index_of(std::string_view name) const;
};

/// Syntax tree of a polynomial expression.
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := '-' factor | base ('^' natural)?
///   base     := variable | rational | '(' expr ')'
///   variable := 'Y' | 'X' natural | 'A' natural | 't'
///   rational := integer ('/' natural)?
struct ExprAST {
  enum class Kind { Sum, Difference, Product, Power, Negation, Variable, Constant };
  Kind kind;
  std::vector<std::unique_ptr<ExprAST>> children;
  std::string name;       // Variable
  mpq_class value;        // Constant
  unsigned exponent = 0;  // Power
  std::size_t position = 0;
};

std::unique_ptr<ExprAST> parse_expr(std::string_view text);

/// Parses and expands into canonical form over `field`. The variable t
/// denotes the generator of an extension field unless `vars` names it.
MultiPoly parse_poly(std::string_view text, const VariableNames& vars, const Field& field);

/// Uses X1..Xn, Y. With n == SIZE_MAX, n is the largest X index seen
/// (at least 1).
MultiPoly parse_poly(std::string_view text, const Field& field, std::size_t n = SIZE_MAX);

/// Largest k such that Xk occurs in the text; 0 if none.
std::size_t max_x_index(std::string_view text);

/// Canonical rendering: terms by descending total degree, coefficient 1
/// omitted, "*" between factors, " + " / " - " between terms.
std::string render_poly(const MultiPoly& f, const VariableNames& vars);
/// Uses X1..X(n-1), Y.
std::string render_poly(const MultiPoly& f);

/// "Q" | "F<p>" | "F<p>^<k>:<modulus in t>"; the modulus may be omitted,
/// in which case the first irreducible in enumeration order is used.
Field parse_field(std::string_view spec);

/// A field element literal: rational, or polynomial in t for extensions.
Element parse_element(std::string_view text, const Field& field);

/// Comma separated coordinates. A coordinate "alg(<modulus>, <residue>)"
/// places the point in the quotient ring field[t]/(modulus); every alg
/// coordinate must use the same modulus and the other coordinates are
/// mapped into that ring.
PointAffine parse_point(std::string_view text, const Field& field);

std::string render_point(const PointAffine& p);

}  // namespace ordisc
