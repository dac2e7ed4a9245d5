#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ordisc/field.hpp"
#include "ordisc/unipoly.hpp"

namespace ordisc {

using Monomial = std::vector<std::uint32_t>;

/// Order of vanishing; std::nullopt stands for +infinity (the zero
/// polynomial).
using Order = std::optional<unsigned>;

/// Sparse multivariate polynomial over a Field. Terms are keyed by exponent
/// vector; no zero coefficient is ever stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Element>;

  MultiPoly() = default;
  MultiPoly(Field field, std::size_t nvars);

  static MultiPoly constant(const Element& c, std::size_t nvars);
  static MultiPoly variable(const Field& field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Element& c, Monomial m);
  static MultiPoly from_univariate(const UniPoly& f, std::size_t nvars, std::size_t var);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Element coeff(const Monomial& m) const;
  /// Adds c to the coefficient of m.
  void add_term(const Monomial& m, const Element& c);

  MultiPoly zero() const { return MultiPoly(field_, nvars_); }
  MultiPoly one() const { return constant(field_.one(), nvars_); }

  MultiPoly operator+(const MultiPoly& b) const;
  MultiPoly operator-(const MultiPoly& b) const;
  MultiPoly operator*(const MultiPoly& b) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  MultiPoly scaled(const Element& s) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& b) const;
  bool operator!=(const MultiPoly& b) const { return !(*this == b); }

  /// Quotient when b divides this exactly; InputError otherwise.
  MultiPoly divide_exact(const MultiPoly& b) const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Lowest total degree over the first `vars` variables (all by default)
  /// among stored terms; nullopt for zero. Syntactic, see ord_at.
  Order low_degree(std::size_t vars = SIZE_MAX) const;

  /// Full evaluation. Coefficients are mapped into the point's field.
  Element evaluate(std::span<const Element> point) const;
  /// Evaluates the first values.size() variables; the result lives in the
  /// remaining nvars - values.size() variables over the values' field.
  MultiPoly evaluate_prefix(std::span<const Element> values) const;
  MultiPoly partial_derivative(std::size_t var) const;
  MultiPoly converted(const Field& target) const;

  /// Coefficients of var^k as polynomials in the other variables, where
  /// `var` is dropped from the variable list.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  /// Inverse of coefficients_in for the last variable.
  static MultiPoly from_last_coefficients(const std::vector<MultiPoly>& coeffs);
  /// Appends `extra` variables with exponent zero.
  MultiPoly with_extra_vars(std::size_t extra) const;
  /// Substitutes an injective variable renumbering: variable i goes to
  /// target[i] in a ring with `nvars` variables.
  MultiPoly renamed(std::span<const std::size_t> target, std::size_t nvars) const;

  /// Drops terms whose degree in the first series_vars variables is >= cap.
  MultiPoly truncated(std::size_t series_vars, unsigned cap) const;
  /// Part of degree exactly k in the first series_vars variables.
  MultiPoly homogeneous_part(std::size_t series_vars, unsigned k) const;

  /// Requires a single variable.
  UniPoly to_univariate() const;

 private:
  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// A point with coordinates in a common field (a quotient ring allowed).
struct PointAffine {
  std::vector<Element> coords;

  std::size_t dim() const { return coords.size(); }
  /// Field of the coordinates; the given fallback for the empty point.
  Field field(const Field& fallback) const;
};

/// F(X, Y) = Y^d + a_1(X) Y^(d-1) + ... + a_d(X), Y being the last variable.
class MonicInY {
 public:
  MonicInY() = default;
  /// a_1..a_d, each in n variables; d >= 1.
  explicit MonicInY(std::vector<MultiPoly> a);
  /// Validates that the Y-leading coefficient is exactly 1.
  static MonicInY from_poly(const MultiPoly& f);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  unsigned d() const { return static_cast<unsigned>(a_.size()); }
  /// a_1..a_d.
  const std::vector<MultiPoly>& coeffs() const { return a_; }
  /// Coefficients of Y^0..Y^d (a_d first, 1 last).
  std::vector<MultiPoly> y_coeffs() const;
  MultiPoly to_poly() const;

  /// F(P, Y) over P's field.
  UniPoly at(const PointAffine& p) const;
  MonicInY converted(const Field& target) const;
  /// F(P + X, Y).
  MonicInY shifted(const PointAffine& p) const;

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<MultiPoly> a_;
};

/// f(P + vars) where the first dim(P) variables are shifted; f is mapped
/// into P's field first. Per-variable Horner shift.
MultiPoly taylor_shift(const MultiPoly& f, const PointAffine& p);

/// Lowest total degree of taylor_shift(f, P). In a quotient ring the test
/// is per root: a zero-divisor leading layer throws ZeroDivisorSplit.
Order ord_at(const MultiPoly& f, const PointAffine& p);

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);

/// Power series in the first `series_vars` variables, truncated at total
/// degree `cap` in those variables. Remaining variables (Y) are never
/// truncated.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(const MultiPoly& poly, std::size_t series_vars, unsigned cap);

  const MultiPoly& poly() const { return poly_; }
  std::size_t series_vars() const { return series_vars_; }
  unsigned cap() const { return cap_; }
  const Field& field() const { return poly_.field(); }

  bool is_zero() const { return poly_.is_zero(); }
  TruncatedSeries zero() const;
  TruncatedSeries one() const;
  TruncatedSeries operator+(const TruncatedSeries& b) const;
  TruncatedSeries operator-(const TruncatedSeries& b) const;
  TruncatedSeries operator*(const TruncatedSeries& b) const;
  TruncatedSeries operator-() const;
  bool operator==(const TruncatedSeries& b) const;
  bool operator!=(const TruncatedSeries& b) const { return !(*this == b); }

  /// Lowest series degree present; nullopt when zero mod the cap.
  Order order() const { return poly_.low_degree(series_vars_); }

 private:
  void check(const TruncatedSeries& b) const;
  MultiPoly poly_;
  std::size_t series_vars_ = 0;
  unsigned cap_ = 0;
};

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

inline unsigned monomial_degree(const Monomial& m, std::size_t vars = SIZE_MAX) {
  unsigned s = 0;
  for (std::size_t i = 0; i < m.size() && i < vars; ++i) s += m[i];
  return s;
}

}  // namespace ordisc
