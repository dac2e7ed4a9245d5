#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "ordisc/multipoly.hpp"
#include "ordisc/univar.hpp"

namespace ordisc {

/// Runs fn on `ring`; whenever fn meets a zero divisor of that ring the
/// modulus is split and fn is rerun on both pieces. Returns one result per
/// final piece, in depth-first order with the vanishing piece first.
template <class Fn>
auto dynamic_evaluate(const Field& ring, Fn&& fn)
    -> std::vector<std::pair<Field, std::invoke_result_t<Fn&, const Field&>>> {
  std::vector<std::pair<Field, std::invoke_result_t<Fn&, const Field&>>> out;
  std::vector<Field> work{ring};
  while (!work.empty()) {
    const Field f = work.back();
    work.pop_back();
    try {
      out.emplace_back(f, fn(f));
    } catch (const ZeroDivisorSplit& s) {
      if (s.ring() != f) throw;
      work.push_back(Field::quotient(f.base(), s.g2()));
      work.push_back(Field::quotient(f.base(), s.g1()));
    }
  }
  return out;
}

/// Image of e in `target`: the same field, a field above it, or a piece of
/// the quotient ring e lives in.
Element reduce_into(const Element& e, const Field& target);
PointAffine reduce_into(const PointAffine& p, const Field& target);

struct FiberClass {
  UniPoly factor;
  unsigned multiplicity = 0;
  bool nonsingular = false;
  bool p_divides_mult = false;
};

struct FiberDecomposition {
  PointAffine point;
  UniPoly fiber;
  std::vector<FiberClass> classes;
  std::size_t r = 0;
  /// Filled over finite fields when every root fits within the extension
  /// limit.
  std::optional<std::vector<ExplicitRoot>> roots;
};

/// F(P, Y) and its squarefree classes, with condition (i) per class.
FiberDecomposition fiber_at(const MonicInY& f, const PointAffine& p,
                            std::size_t max_ext_degree = 0, std::uint64_t seed = 0);

/// True iff F has a nonzero gradient at (P, b) for every root b of g:
/// gcd(g, dF/dY(P, Y), dF/dX1(P, Y), ..., dF/dXn(P, Y)) == 1.
bool condition_i_via_gcd(const MonicInY& f, const PointAffine& p, const UniPoly& g);

struct PointReport {
  PointAffine point;
  unsigned d = 0;
  unsigned ord_p_d = 0;
  std::size_t r = 0;
  unsigned lower_bound = 0;
  bool inequality_holds = false;
  bool cond_i = false;
  bool cond_ii = false;
  bool equality_predicted = false;
  bool equality_observed = false;
  bool consistent = false;
  std::vector<FiberClass> classes;
};

/// DiscriminantIdenticallyZero when D == 0. The report is returned even
/// when a claim fails; see assert_point_report.
PointReport analyze_point(const MonicInY& f, const PointAffine& p);
/// Same, with D = disc_Y F supplied by the caller.
PointReport analyze_point(const MonicInY& f, const MultiPoly& disc, const PointAffine& p);
/// For points in a quotient ring: one report per piece of the modulus.
std::vector<std::pair<Field, PointReport>> analyze_point_split(const MonicInY& f,
                                                               const PointAffine& p);

/// FormulaViolation unless the inequality holds and the report is consistent.
void assert_point_report(const PointReport& r);

/// ord_P D <= 1 forces nonsingular fibers, with r == d (ord 0) or r == d-1
/// (ord 1).
bool low_order_check(const PointReport& r);
/// For a singular class: m <= ord_P D and m <= d - r + 1. Vacuous otherwise.
bool multiplicity_bound_check(const PointReport& r, const FiberClass& c);
bool multiplicity_bound_check(const PointReport& r);

struct UniversalPointReport {
  unsigned d = 0;
  std::vector<Element> a;
  unsigned ord = 0;
  std::size_t r = 0;
  unsigned lower_bound = 0;
  bool inequality_holds = false;
  bool equality_predicted = false;
  bool equality_observed = false;
  bool consistent = false;
};

/// Orders of the universal discriminant at a point a of K^d.
/// DegreeUnsupported for d > 8.
UniversalPointReport analyze_universal_point(unsigned d, const std::vector<Element>& a);

struct CurveWitness {
  /// Piece of the multiple-root locus of D: x runs over its roots.
  UniPoly locus;
  unsigned multiplicity = 0;
  unsigned ord_p_d = 0;
  unsigned ord_universal = 0;
  bool match = false;
};

struct CurveReport {
  bool nonsingular = true;
  std::vector<CurveWitness> witnesses;
};

/// n == 1 over Q: F = 0 is nonsingular iff ord_P D == ord_a(P) D~ at every
/// singular point P of D = 0. CharPUnsupported, DegreeUnsupported.
CurveReport curve_criterion(const MonicInY& f);

struct ScanReport {
  std::string field;
  std::size_t points_tested = 0;
  std::vector<std::string> violations;
  std::vector<std::string> oracle_mismatches;
  std::size_t equality_count = 0;
  std::size_t strict_count = 0;
  /// Points with ord_P D <= 1, and singular classes met; both feed the
  /// corollary checks.
  std::size_t low_order_count = 0;
  std::size_t singular_class_count = 0;
};

struct ScanOptions {
  /// Points of F_(p^j)^n are scanned for j = 1..max_ext_degree.
  unsigned max_ext_degree = 1;
  std::size_t budget = 20000;
  std::uint64_t seed = 0;
};

/// Every point of F_(p^j)^n, j <= max_ext_degree, through analyze_point and
/// an explicit-root oracle. F must be over a prime field, n <= 2.
ScanReport scan_exhaustive(const MonicInY& f, const ScanOptions& opt = {});
/// Accumulates into `into`; budget is applied per polynomial.
void scan_into(ScanReport& into, const MonicInY& f, const ScanOptions& opt);

/// Number of points a scan of F over `field` would test.
std::size_t scan_point_count(std::uint64_t p, std::size_t n, unsigned max_ext_degree);

/// Random monic polynomial in n variables with Y-degree d and coefficient
/// total degree <= coeff_degree.
MonicInY random_monic(const Field& field, std::size_t n, unsigned d, unsigned coeff_degree,
                      std::mt19937_64& rng);

}  // namespace ordisc
