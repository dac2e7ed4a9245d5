#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ordisc/multipoly.hpp"

namespace ordisc {

/// Monic in Y with F(0, Y) = Y^d, either exact over K[X] or with
/// coefficients truncated at total X-degree cap.
class DistinguishedPoly {
 public:
  /// InputError unless F(0, Y) == Y^d.
  static DistinguishedPoly exact(MonicInY f);
  /// `series` lives in n + 1 variables (Y last), truncated in the first n.
  static DistinguishedPoly truncated(const TruncatedSeries& series);

  bool is_exact() const { return !series_.has_value(); }
  unsigned d() const { return d_; }
  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  /// Exact input only.
  const MonicInY& poly() const { return *exact_; }
  /// Truncated input only.
  const TruncatedSeries& series() const { return *series_; }

 private:
  DistinguishedPoly() = default;
  Field field_;
  std::size_t n_ = 0;
  unsigned d_ = 0;
  std::optional<MonicInY> exact_;
  std::optional<TruncatedSeries> series_;
};

/// mu~ = ord_0 D - d + 1. `value` is nullopt when D == 0 (exact input).
/// For truncated input whose discriminant vanishes below the cap,
/// `at_least` is set and `value` holds the lower bound cap - d + 1.
struct MuTilde {
  Order value;
  Order disc_order;
  unsigned d = 0;
  bool at_least = false;

  bool is_infinite() const { return !value.has_value(); }
};

MuTilde mu_tilde(const DistinguishedPoly& f);

struct DistinguishedVerdict {
  MuTilde mu;
  unsigned ord0_f = 0;
  bool p_divides_d = false;
  bool equality_predicted = false;
  bool equality_observed = false;
};

/// mu~ >= 0, and mu~ == 0 exactly when ord_0 F == 1 and p does not divide d.
/// DiscriminantZero when D == 0; FormulaViolation when a claim fails.
DistinguishedVerdict distinguished_verdict(const DistinguishedPoly& f);

/// Factorization F = F_1 ... F_r in K[[X]][Y] modulo (X)^cap around the
/// origin after translating P there; F_i(0, Y) = (Y - b_i)^(d_i).
struct HenselFactorization {
  unsigned cap = 0;
  std::size_t n = 0;
  Field field;
  /// Monic in Y, n + 1 variables, truncated in X.
  std::vector<TruncatedSeries> factors;
  std::vector<Element> centers;
  std::vector<unsigned> degrees;

  std::size_t r() const { return factors.size(); }
  /// Coefficients of Y^0..Y^(d_i) of F_i as series in X.
  std::vector<TruncatedSeries> y_coefficients(std::size_t i) const;
  /// disc_Y F_i mod (X)^cap.
  TruncatedSeries discriminant(std::size_t i) const;
  /// Res_Y(F_i, F_j) mod (X)^cap.
  TruncatedSeries resultant(std::size_t i, std::size_t j) const;
  /// prod F_i mod (X)^cap.
  TruncatedSeries product() const;
};

/// RootsNotSplit when F(P, Y) is not a product of powers of linear factors
/// over P's field; PrecisionZero for cap == 0.
HenselFactorization hensel_split(const MonicInY& f, const PointAffine& p, unsigned cap,
                                 std::uint64_t seed = 0);

struct ProductFormulaReport {
  bool product_ok = false;
  bool resultant_constants_ok = false;
  bool orders_ok = false;
  Order disc_order;
  std::vector<Order> factor_orders;
};

/// `d` is disc_Y of F translated to the origin, in n variables. Checks
/// D == prod D_i prod R_ij^2 mod (X)^cap, R_ij(0) == (b_i - b_j)^(d_i d_j)
/// and ord_0 D == sum ord_0 D_i. FormulaViolation on failure.
ProductFormulaReport verify_product_formula(const HenselFactorization& h, const MultiPoly& d);

/// mu~ of the Hensel factor F_i, shifted so that its center is 0.
MuTilde factor_mu_tilde(const HenselFactorization& h, std::size_t i);

struct LocalOrderDecomposition {
  unsigned lhs = 0;
  std::vector<MuTilde> rhs_terms;
  unsigned d = 0;
  std::size_t r = 0;
  std::vector<Element> centers;
  unsigned cap = 0;

  /// sum rhs_terms + d - r.
  unsigned rhs() const;
};

/// ord_P D on the left from the exact discriminant; on the right, for each
/// fiber point Q, mu~ of the local factor of F translated to Q. The cap
/// defaults to ord_P D + 4. FormulaViolation if the two sides differ.
LocalOrderDecomposition local_order_decomposition(const MonicInY& f, const PointAffine& p,
                                                  std::optional<unsigned> cap = std::nullopt,
                                                  std::uint64_t seed = 0);

/// Default cap for a point: ord_P D + 4.
unsigned default_cap(const MonicInY& f, const PointAffine& p);

}  // namespace ordisc
