#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordisc/field.hpp"

namespace ordisc {

/// Dense univariate polynomial over a Field, coefficients low degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field field);
  UniPoly(Field field, std::vector<Element> coeffs);

  static UniPoly constant(const Element& c);
  static UniPoly monomial(const Element& c, std::size_t k);
  /// The variable itself.
  static UniPoly x(const Field& field);
  /// x - c
  static UniPoly linear_root(const Element& c);

  const Field& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Element coeff(std::size_t k) const;
  const Element& leading() const { return c_.back(); }

  UniPoly operator+(const UniPoly& b) const;
  UniPoly operator-(const UniPoly& b) const;
  UniPoly operator*(const UniPoly& b) const;
  UniPoly operator-() const;
  UniPoly scaled(const Element& s) const;
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& b) const;
  UniPoly operator/(const UniPoly& b) const { return divmod(b).first; }
  UniPoly operator%(const UniPoly& b) const { return divmod(b).second; }
  bool operator==(const UniPoly& b) const;
  bool operator!=(const UniPoly& b) const { return !(*this == b); }

  UniPoly monic() const;
  UniPoly derivative() const;
  /// Evaluate at x; coefficients are converted into x's field.
  Element evaluate(const Element& x) const;
  /// Reinterpret over a field containing this one.
  UniPoly converted(const Field& target) const;
  /// this^e mod m.
  UniPoly pow_mod(const mpz_class& e, const UniPoly& m) const;
  /// this(x^k)... inverse: the polynomial g with this == g(x^k); requires
  /// every exponent to be a multiple of k.
  UniPoly deflate(std::size_t k) const;

  std::string to_string(const std::string& var = "Y") const;

 private:
  void trim();
  Field field_;
  std::vector<Element> c_;
};

/// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly g;  // monic
  UniPoly s;
  UniPoly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace ordisc
