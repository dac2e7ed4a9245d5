#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ordisc/errors.hpp"

namespace ordisc {

class Element;

enum class FieldKind { Rationals, Prime, Extension };

/// Coefficient domain for every computation in the library.
///
/// A Field is a cheap, immutable handle. Three shapes exist:
///  - the rationals,
///  - a prime field F_p,
///  - a residue ring base[t]/(m) over another Field.
///
/// The residue ring is a genuine field when m is irreducible; extension()
/// verifies this for finite bases. quotient() only requires m squarefree and
/// is the carrier for dynamic evaluation: inverting a zero divisor throws
/// ZeroDivisorSplit with the two coprime pieces of m.
class Field {
 public:
  Field() = default;
  static Field rationals();
  static Field prime(std::uint64_t p);
  /// base[t]/(modulus). Throws NotInField unless modulus is monic and
  /// irreducible over the finite field `base`.
  static Field extension(const Field& base, std::vector<Element> modulus);
  /// base[t]/(modulus) for monic squarefree modulus, reducible allowed.
  static Field quotient(const Field& base, std::vector<Element> modulus);
  /// Smallest monic irreducible of the given degree over a finite field, in
  /// enumeration order of its coefficient vector.
  static std::vector<Element> find_irreducible(const Field& base, std::size_t degree);

  FieldKind kind() const;
  std::uint64_t characteristic() const;
  bool is_finite() const;
  /// True unless this is a quotient ring whose modulus is not known to be
  /// irreducible.
  bool is_field() const;
  /// Number of elements; finite fields only.
  const mpz_class& order() const;
  /// Base of a residue ring; SpecMismatch for Rationals and Prime.
  const Field& base() const;
  const std::vector<Element>& modulus() const;
  /// Degree over the base field (1 for Rationals and Prime).
  std::size_t degree() const;

  Element zero() const;
  Element one() const;
  Element from_int(long v) const;
  Element from_rational(const mpq_class& q) const;
  /// Class of t in base[t]/(m).
  Element generator() const;
  Element from_residue(std::vector<Element> coeffs) const;

  /// Map an element of this field or of any field below it in the tower.
  /// Rational values are reduced when this field has positive characteristic.
  Element convert(const Element& e) const;
  /// True if elements of `other` embed into this field.
  bool contains(const Field& other) const;

  /// All elements in canonical enumeration order; finite fields only.
  std::vector<Element> elements() const;
  Element random_element(std::mt19937_64& rng) const;

  /// Spec string: "Q", "F5", "F2^2:t^2 + t + 1"; towers nest in brackets.
  std::string to_string() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class Element;
};

enum class ZeroTestKind { Zero, Nonzero, Split };

struct ZeroTestResult;

/// Element of a Field. Canonical after every operation: rationals are
/// reduced, residues are fully reduced mod p or mod the modulus, so zero
/// testing is syntactic.
class Element {
 public:
  using Residue = std::vector<Element>;

  Element() = default;

  const Field& field() const { return field_; }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Coefficients over the base field, low degree first, trimmed.
  const Residue& residue_poly() const { return std::get<Residue>(value_); }

  bool is_zero() const;
  bool is_one() const;

  Element zero() const { return field_.zero(); }
  Element one() const { return field_.one(); }

  Element operator+(const Element& b) const;
  Element operator-(const Element& b) const;
  Element operator*(const Element& b) const;
  Element operator/(const Element& b) const;
  Element operator-() const;
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  Element divide_exact(const Element& b) const { return *this / b; }
  /// Multiplicative inverse. In a quotient ring a zero divisor throws
  /// ZeroDivisorSplit.
  Element inverse() const;
  Element pow(const mpz_class& e) const;
  Element pow(unsigned long e) const { return pow(mpz_class(e)); }
  /// Unique r with r^p == *this; finite fields only.
  Element pth_root() const;

  /// Per-root zero test in a quotient ring; decisive in fields.
  ZeroTestResult zero_test() const;

  bool operator==(const Element& b) const;
  bool operator!=(const Element& b) const { return !(*this == b); }

  /// Stable total order within a field, used for canonical sorting.
  bool less(const Element& b) const;

  std::string to_string() const;
  /// Rendered form needs parentheses when used as a factor.
  bool is_compound() const;
  /// True if the canonical representative is a negative rational.
  bool is_negative_rational() const;

 private:
  friend class Field;
  Element(Field f, mpq_class q);
  Element(Field f, std::uint64_t r);
  Element(Field f, Residue r);

  Field field_;
  std::variant<mpq_class, std::uint64_t, Residue> value_;
};

struct ZeroTestResult {
  ZeroTestKind kind;
  /// Populated for Split: g1 * g2 == modulus, element vanishes mod g1 and is
  /// invertible mod g2. Both monic of positive degree.
  std::vector<Element> g1;
  std::vector<Element> g2;
};

/// Thrown when a zero divisor is met inside a quotient ring.
class ZeroDivisorSplit : public Error {
 public:
  ZeroDivisorSplit(Field ring, std::vector<Element> g1, std::vector<Element> g2)
      : Error("zero divisor in quotient ring " + ring.to_string()),
        ring_(std::move(ring)),
        g1_(std::move(g1)),
        g2_(std::move(g2)) {}
  const Field& ring() const { return ring_; }
  const std::vector<Element>& g1() const { return g1_; }
  const std::vector<Element>& g2() const { return g2_; }

 private:
  Field ring_;
  std::vector<Element> g1_;
  std::vector<Element> g2_;
};

bool is_prime(std::uint64_t n);

}  // namespace ordisc
