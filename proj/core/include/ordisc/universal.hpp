#pragma once

#include <utility>
#include <vector>

#include "ordisc/multipoly.hpp"

namespace ordisc {

inline constexpr unsigned kMaxUniversalDegree = 8;

/// disc_Y(Y^d + A1 Y^(d-1) + ... + Ad) as an integer polynomial in A1..Ad,
/// together with its expansion sum_k alpha_k(A1..A(d-1)) Ad^(d-1-k).
struct UniversalDiscriminant {
  unsigned d = 0;
  /// d variables over Q, integer coefficients.
  MultiPoly poly;
  /// alpha_0..alpha_(d-1), each in d - 1 variables.
  std::vector<MultiPoly> alpha;
};

/// Cached per d; thread safe. DegreeUnsupported outside 1..8.
const UniversalDiscriminant& universal_discriminant(unsigned d);

/// (-1)^(d(d-1)/2) d^d
mpz_class expected_leading_coefficient(unsigned d);

struct AlphaOrderBound {
  unsigned k = 0;
  Order order;
  unsigned bound = 0;
  bool ok = false;
};

struct ExpansionReport {
  unsigned d = 0;
  bool leading_coeff_ok = false;
  std::vector<AlphaOrderBound> alpha_order_bounds;
  /// Every monomial satisfies sum i p_i == d(d-1).
  bool quasi_homogeneous = false;
  /// Every monomial has p_d <= d-1.
  bool last_exponent_ok = false;
  /// sum p_i >= d-1, with equality only at Ad^(d-1).
  bool total_degree_ok = false;
  /// ord_0 of the whole discriminant is d-1.
  bool order_ok = false;

  bool all_ok() const;
};

ExpansionReport check_expansion(const UniversalDiscriminant& u);

struct ReductionReport {
  unsigned d = 0;
  /// D(A1..A(d-1), 0) == d~(A1..A(d-1)) * A(d-1)^2 with d~ the universal
  /// discriminant of degree d-1.
  bool factorization_ok = false;
  Order reduced_order;
  bool reduced_order_ok = false;
  Order last_alpha_order;
  bool last_alpha_order_ok = false;

  bool all_ok() const { return factorization_ok && reduced_order_ok && last_alpha_order_ok; }
};

/// 2 <= d <= 8.
ReductionReport check_reduction(unsigned d);

struct NewtonDiagram {
  unsigned d = 0;
  /// (ord_0 alpha_k, d-k-1) for every nonzero alpha_k, in order of k.
  std::vector<std::pair<unsigned, unsigned>> points;
  bool endpoints_ok = false;
  /// Every non-endpoint (x, y) has d*y > (d-1)(d-x).
  bool strict_above_ok = false;
};

/// d >= 2.
NewtonDiagram newton_diagram(const UniversalDiscriminant& u);

struct StructureReport {
  ExpansionReport expansion;
  ReductionReport reduction;
  NewtonDiagram newton;

  bool all_ok() const {
    return expansion.all_ok() && reduction.all_ok() && newton.endpoints_ok && newton.strict_above_ok;
  }
};

/// All structural checks for one degree, 2 <= d <= 8.
StructureReport structure_report(unsigned d);

/// Substitutes Ai -> values[i-1] (a polynomial in any variables over any
/// field containing the reductions of the integer coefficients).
MultiPoly specialize_universal(unsigned d, const std::vector<MultiPoly>& values);

}  // namespace ordisc
