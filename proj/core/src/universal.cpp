#include "ordisc/universal.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ordisc/resultant.hpp"

namespace ordisc {

namespace {

std::unique_ptr<UniversalDiscriminant> build(unsigned d) {
  const Field q = Field::rationals();
  auto u = std::make_unique<UniversalDiscriminant>();
  u->d = d;
  // Coefficients of Y^0..Y^d: Ad, A(d-1), ..., A1, 1.
  std::vector<MultiPoly> c;
  for (unsigned k = d; k >= 1; --k) c.push_back(MultiPoly::variable(q, d, k - 1));
  c.push_back(MultiPoly::constant(q.one(), d));
  u->poly = discriminant_y<MultiPoly>(std::span<const MultiPoly>(c));
  const auto slices = u->poly.coefficients_in(d - 1);
  u->alpha.assign(d, MultiPoly(q, d - 1));
  for (std::size_t e = 0; e < slices.size(); ++e) {
    if (e > d - 1) throw FormulaViolation("A_d-degree exceeds d-1");
    u->alpha[d - 1 - e] = slices[e];
  }
  return u;
}

}  // namespace

const UniversalDiscriminant& universal_discriminant(unsigned d) {
  if (d < 1 || d > kMaxUniversalDegree) throw DegreeUnsupported(d);
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<UniversalDiscriminant>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = build(d);
  return *slot;
}

mpz_class expected_leading_coefficient(unsigned d) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), d, d);
  return (d * (d - 1) / 2) % 2 == 0 ? v : mpz_class(-v);
}

bool ExpansionReport::all_ok() const {
  bool ok = leading_coeff_ok && quasi_homogeneous && last_exponent_ok && total_degree_ok && order_ok;
  for (const auto& a : alpha_order_bounds) ok = ok && a.ok;
  return ok;
}

ExpansionReport check_expansion(const UniversalDiscriminant& u) {
  const unsigned d = u.d;
  ExpansionReport rep;
  rep.d = d;
  const MultiPoly& a0 = u.alpha.at(0);
  rep.leading_coeff_ok =
      a0.is_constant() && !a0.is_zero() &&
      a0.coeff(Monomial(d - 1, 0)).rational() == mpq_class(expected_leading_coefficient(d));
  for (unsigned k = 1; k < d; ++k) {
    AlphaOrderBound b;
    b.k = k;
    b.order = u.alpha[k].low_degree();
    b.bound = k + 1;
    b.ok = !b.order || *b.order >= b.bound;
    rep.alpha_order_bounds.push_back(b);
  }
  rep.quasi_homogeneous = rep.last_exponent_ok = rep.total_degree_ok = true;
  Monomial corner(d, 0);
  corner[d - 1] = d - 1;
  for (const auto& [m, c] : u.poly.terms()) {
    unsigned weighted = 0, total = 0;
    for (unsigned i = 0; i < d; ++i) {
      weighted += (i + 1) * m[i];
      total += m[i];
    }
    if (weighted != d * (d - 1)) rep.quasi_homogeneous = false;
    if (m[d - 1] > d - 1) rep.last_exponent_ok = false;
    if (total < d - 1 || (total == d - 1 && m != corner)) rep.total_degree_ok = false;
  }
  const Order ord = u.poly.low_degree();
  rep.order_ok = ord && *ord == d - 1;
  return rep;
}

ReductionReport check_reduction(unsigned d) {
  if (d < 2 || d > kMaxUniversalDegree) throw DegreeUnsupported(d);
  const UniversalDiscriminant& u = universal_discriminant(d);
  const UniversalDiscriminant& reduced = universal_discriminant(d - 1);
  ReductionReport rep;
  rep.d = d;
  const MultiPoly at_zero = u.poly.coefficients_in(d - 1).front();
  const MultiPoly last = MultiPoly::variable(Field::rationals(), d - 1, d - 2);
  rep.factorization_ok = at_zero == reduced.poly * last * last;
  rep.reduced_order = reduced.poly.low_degree();
  rep.reduced_order_ok = rep.reduced_order && *rep.reduced_order == d - 2;
  rep.last_alpha_order = u.alpha[d - 1].low_degree();
  rep.last_alpha_order_ok = rep.last_alpha_order && *rep.last_alpha_order == d;
  return rep;
}

NewtonDiagram newton_diagram(const UniversalDiscriminant& u) {
  const unsigned d = u.d;
  if (d < 2) throw DegreeUnsupported(d);
  NewtonDiagram nd;
  nd.d = d;
  for (unsigned k = 0; k < d; ++k) {
    const Order o = u.alpha[k].low_degree();
    if (o) nd.points.emplace_back(*o, d - k - 1);
  }
  bool left = false, right = false;
  nd.strict_above_ok = true;
  for (const auto& [x, y] : nd.points) {
    if (x == 0 && y == d - 1) {
      left = true;
      continue;
    }
    if (x == d && y == 0) {
      right = true;
      continue;
    }
    if (!(static_cast<long>(d) * y > static_cast<long>(d - 1) * (static_cast<long>(d) - x)))
      nd.strict_above_ok = false;
  }
  nd.endpoints_ok = left && right;
  return nd;
}

StructureReport structure_report(unsigned d) {
  if (d < 2 || d > kMaxUniversalDegree) throw DegreeUnsupported(d);
  const UniversalDiscriminant& u = universal_discriminant(d);
  return {check_expansion(u), check_reduction(d), newton_diagram(u)};
}

MultiPoly specialize_universal(unsigned d, const std::vector<MultiPoly>& values) {
  if (values.size() != d) throw SpecMismatch("need one value per A_i");
  const UniversalDiscriminant& u = universal_discriminant(d);
  const MultiPoly& proto = values.front();
  MultiPoly acc = proto.zero();
  for (const auto& [m, c] : u.poly.terms()) {
    MultiPoly term = MultiPoly::constant(proto.field().convert(c), proto.nvars());
    for (unsigned i = 0; i < d; ++i)
      if (m[i]) term = term * values[i].pow(m[i]);
    acc += term;
  }
  return acc;
}

}  // namespace ordisc
