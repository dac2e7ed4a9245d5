#include "ordisc/analyzer.hpp"

#include <algorithm>

#include "ordisc/exprparse.hpp"
#include "ordisc/resultant.hpp"
#include "ordisc/universal.hpp"

namespace ordisc {

Element reduce_into(const Element& e, const Field& target) {
  if (e.field() == target) return e;
  const Field& src = e.field();
  if (src.kind() == FieldKind::Extension && target.kind() == FieldKind::Extension &&
      !src.is_field() && src.base() == target.base())
    return target.from_residue(e.residue_poly());
  return target.convert(e);
}

PointAffine reduce_into(const PointAffine& p, const Field& target) {
  PointAffine out;
  for (const auto& c : p.coords) out.coords.push_back(reduce_into(c, target));
  return out;
}

bool condition_i_via_gcd(const MonicInY& f, const PointAffine& p, const UniPoly& g) {
  if (p.dim() != f.n()) throw SpecMismatch("point dimension");
  const MultiPoly whole = f.to_poly();
  const Field field = p.field(f.field());
  UniPoly acc = g.converted(field);
  // Y first: it is the derivative most often decisive.
  std::vector<std::size_t> vars{f.n()};
  for (std::size_t i = 0; i < f.n(); ++i) vars.push_back(i);
  for (std::size_t v : vars) {
    MultiPoly h = whole.partial_derivative(v);
    h = p.dim() ? h.evaluate_prefix(p.coords) : h.converted(field);
    acc = gcd(acc, h.to_univariate() % acc);
    if (acc.degree() == 0) return true;
  }
  return acc.degree() == 0;
}

FiberDecomposition fiber_at(const MonicInY& f, const PointAffine& p, std::size_t max_ext_degree,
                            std::uint64_t seed) {
  FiberDecomposition fib;
  fib.point = p;
  fib.fiber = f.at(p);
  const std::uint64_t ch = fib.fiber.field().characteristic();
  for (const auto& part : squarefree_decompose(fib.fiber).parts) {
    FiberClass c;
    c.factor = part.factor;
    c.multiplicity = part.multiplicity;
    c.nonsingular = condition_i_via_gcd(f, p, part.factor);
    c.p_divides_mult = ch != 0 && part.multiplicity % ch == 0;
    fib.r += static_cast<std::size_t>(part.factor.degree());
    fib.classes.push_back(std::move(c));
  }
  const Field& field = fib.fiber.field();
  if (max_ext_degree > 0 && field.is_finite() && field.is_field()) {
    std::mt19937_64 rng(seed);
    try {
      fib.roots = explicit_roots(fib.fiber, max_ext_degree, rng);
    } catch (const ExtensionDegreeExceeded&) {
    }
  }
  return fib;
}

PointReport analyze_point(const MonicInY& f, const PointAffine& p) {
  return analyze_point(f, discriminant_y(f), p);
}

PointReport analyze_point(const MonicInY& f, const MultiPoly& disc, const PointAffine& p) {
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  PointReport rep;
  rep.point = p;
  rep.d = f.d();
  const Order ord = ord_at(disc, p);
  if (!ord) throw DiscriminantIdenticallyZero();
  rep.ord_p_d = *ord;
  FiberDecomposition fib = fiber_at(f, p);
  rep.r = fib.r;
  rep.classes = std::move(fib.classes);
  rep.lower_bound = rep.d - static_cast<unsigned>(rep.r);
  rep.inequality_holds = rep.ord_p_d >= rep.lower_bound;
  rep.cond_i = std::all_of(rep.classes.begin(), rep.classes.end(),
                           [](const FiberClass& c) { return c.nonsingular; });
  rep.cond_ii = std::none_of(rep.classes.begin(), rep.classes.end(),
                             [](const FiberClass& c) { return c.p_divides_mult; });
  rep.equality_predicted = rep.cond_i && rep.cond_ii;
  rep.equality_observed = rep.ord_p_d == rep.lower_bound;
  rep.consistent = rep.equality_predicted == rep.equality_observed;
  return rep;
}

std::vector<std::pair<Field, PointReport>> analyze_point_split(const MonicInY& f,
                                                               const PointAffine& p) {
  const MultiPoly disc = discriminant_y(f);
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  const Field ring = p.field(f.field());
  if (ring.is_field()) return {{ring, analyze_point(f, disc, p)}};
  return dynamic_evaluate(ring, [&](const Field& piece) {
    return analyze_point(f, disc, reduce_into(p, piece));
  });
}

void assert_point_report(const PointReport& r) {
  if (!r.inequality_holds)
    throw FormulaViolation("ord_P D = " + std::to_string(r.ord_p_d) + " < d - r = " +
                           std::to_string(r.lower_bound));
  if (!r.consistent)
    throw FormulaViolation("equality does not match conditions (i) and (ii)");
}

bool low_order_check(const PointReport& r) {
  if (r.ord_p_d == 0) return r.cond_i && r.r == r.d;
  if (r.ord_p_d == 1) return r.cond_i && r.r + 1 == r.d;
  return true;
}

bool multiplicity_bound_check(const PointReport& r, const FiberClass& c) {
  if (c.nonsingular) return true;
  return c.multiplicity <= r.ord_p_d && c.multiplicity + r.r <= r.d + 1;
}

bool multiplicity_bound_check(const PointReport& r) {
  return std::all_of(r.classes.begin(), r.classes.end(),
                     [&](const FiberClass& c) { return multiplicity_bound_check(r, c); });
}

UniversalPointReport analyze_universal_point(unsigned d, const std::vector<Element>& a) {
  if (d < 1 || d > kMaxUniversalDegree) throw DegreeUnsupported(d);
  if (a.size() != d) throw SpecMismatch("need d coordinates");
  const UniversalDiscriminant& u = universal_discriminant(d);
  UniversalPointReport rep;
  rep.d = d;
  rep.a = a;
  PointAffine p{a};
  const Field field = p.field(Field::rationals());
  rep.ord = *ord_at(u.poly, p);
  std::vector<Element> c;
  for (unsigned i = d; i >= 1; --i) c.push_back(a[i - 1]);
  c.push_back(field.one());
  const SquarefreeDecomposition sq = squarefree_decompose(UniPoly(field, std::move(c)));
  rep.r = sq.distinct_roots();
  rep.lower_bound = d - static_cast<unsigned>(rep.r);
  rep.inequality_holds = rep.ord >= rep.lower_bound;
  const std::uint64_t ch = field.characteristic();
  rep.equality_predicted =
      ch == 0 || std::none_of(sq.parts.begin(), sq.parts.end(), [&](const SquarefreePart& s) {
        return s.multiplicity % ch == 0;
      });
  rep.equality_observed = rep.ord == rep.lower_bound;
  rep.consistent = rep.equality_predicted == rep.equality_observed;
  return rep;
}

CurveReport curve_criterion(const MonicInY& f) {
  if (f.field().characteristic() != 0) throw CharPUnsupported();
  if (f.field().kind() != FieldKind::Rationals) throw SpecMismatch("criterion needs F over Q");
  if (f.n() != 1) throw SpecMismatch("criterion needs one X variable");
  if (f.d() > kMaxUniversalDegree) throw DegreeUnsupported(f.d());
  const MultiPoly disc = discriminant_y(f);
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  CurveReport rep;
  const UniPoly du = disc.to_univariate();
  if (du.degree() < 1) return rep;
  const UniversalDiscriminant& u = universal_discriminant(f.d());
  const Field q = Field::rationals();
  for (const auto& part : squarefree_decompose(du.monic()).parts) {
    if (part.multiplicity < 2) continue;
    const Field ring = Field::quotient(q, part.factor.coeffs());
    auto pieces = dynamic_evaluate(ring, [&](const Field& piece) {
      const PointAffine p{{piece.generator()}};
      const unsigned ord_d = *ord_at(disc, p);
      PointAffine a;
      for (const auto& ai : f.coeffs()) a.coords.push_back(ai.evaluate(p.coords));
      const unsigned ord_u = *ord_at(u.poly, a);
      return std::make_pair(ord_d, ord_u);
    });
    for (const auto& [piece, orders] : pieces) {
      CurveWitness w;
      w.locus = UniPoly(q, piece.modulus());
      w.multiplicity = part.multiplicity;
      w.ord_p_d = orders.first;
      w.ord_universal = orders.second;
      if (w.ord_p_d != w.multiplicity)
        throw FormulaViolation("order of D at a root differs from its multiplicity");
      w.match = w.ord_p_d == w.ord_universal;
      rep.nonsingular = rep.nonsingular && w.match;
      rep.witnesses.push_back(std::move(w));
    }
  }
  return rep;
}

std::size_t scan_point_count(std::uint64_t p, std::size_t n, unsigned max_ext_degree) {
  std::size_t total = 0;
  for (unsigned j = 1; j <= max_ext_degree; ++j) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < j * n; ++k) {
      if (c > SIZE_MAX / p) return SIZE_MAX;
      c *= p;
    }
    total += c;
  }
  return total;
}

namespace {

std::string describe(const MonicInY& f, const PointAffine& p, const std::string& what) {
  return "F = " + render_poly(f.to_poly()) + ", P = (" + render_point(p) + "): " + what;
}

// Point-wise verdicts from explicit roots, compared with the gcd method.
void oracle_compare(const MonicInY& f, const PointAffine& p, const PointReport& rep,
                    std::mt19937_64& rng, std::vector<std::string>& mismatches) {
  const UniPoly fiber = f.at(p);
  const std::uint64_t ch = fiber.field().characteristic();
  const auto roots = explicit_roots(fiber, f.d(), rng);
  const MultiPoly whole = f.to_poly();
  std::vector<MultiPoly> grad;
  for (std::size_t v = 0; v <= f.n(); ++v) grad.push_back(whole.partial_derivative(v));

  std::vector<bool> class_all_nonsingular(rep.classes.size(), true);
  bool cond_i = true, cond_ii = true;
  for (const auto& [field, b] : roots) {
    UniPoly rest = fiber.converted(field);
    unsigned mult = 0;
    const UniPoly lin = UniPoly::linear_root(b);
    while (rest.evaluate(b).is_zero()) {
      rest = rest / lin;
      ++mult;
    }
    std::vector<Element> q;
    for (const auto& c : p.coords) q.push_back(field.convert(c));
    q.push_back(b);
    const bool nonsingular =
        std::any_of(grad.begin(), grad.end(), [&](const MultiPoly& g) { return !g.evaluate(q).is_zero(); });
    cond_i = cond_i && nonsingular;
    cond_ii = cond_ii && !(ch != 0 && mult % ch == 0);
    std::size_t owner = rep.classes.size();
    for (std::size_t k = 0; k < rep.classes.size(); ++k)
      if (rep.classes[k].factor.evaluate(b).is_zero()) owner = k;
    if (owner == rep.classes.size()) {
      mismatches.push_back(describe(f, p, "root " + b.to_string() + " in no class"));
      continue;
    }
    if (rep.classes[owner].multiplicity != mult)
      mismatches.push_back(describe(f, p, "multiplicity of root " + b.to_string()));
    if (!nonsingular) class_all_nonsingular[owner] = false;
  }
  if (roots.size() != rep.r) mismatches.push_back(describe(f, p, "root count"));
  for (std::size_t k = 0; k < rep.classes.size(); ++k)
    if (class_all_nonsingular[k] != rep.classes[k].nonsingular)
      mismatches.push_back(describe(f, p, "condition (i) for class " +
                                              rep.classes[k].factor.to_string()));
  if (cond_i != rep.cond_i) mismatches.push_back(describe(f, p, "condition (i)"));
  if (cond_ii != rep.cond_ii) mismatches.push_back(describe(f, p, "condition (ii)"));
}

}  // namespace

void scan_into(ScanReport& into, const MonicInY& f, const ScanOptions& opt) {
  const Field& base = f.field();
  if (base.kind() != FieldKind::Prime) throw NotFiniteField();
  if (f.n() > 2) throw SpecMismatch("scan supports n <= 2");
  if (opt.max_ext_degree < 1 || opt.max_ext_degree > 2)
    throw InputError("scan extension degree must be 1 or 2");
  const std::size_t count = scan_point_count(base.characteristic(), f.n(), opt.max_ext_degree);
  if (count > opt.budget) throw BudgetExceeded(count);
  const MultiPoly disc = discriminant_y(f);
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  std::mt19937_64 rng(opt.seed);
  for (unsigned j = 1; j <= opt.max_ext_degree; ++j) {
    const Field k = j == 1 ? base : Field::extension(base, Field::find_irreducible(base, j));
    const std::vector<Element> elems = k.elements();
    std::vector<std::size_t> idx(f.n(), 0);
    while (true) {
      PointAffine p;
      for (std::size_t i : idx) p.coords.push_back(elems[i]);
      const PointReport rep = analyze_point(f, disc, p);
      ++into.points_tested;
      if (rep.equality_observed)
        ++into.equality_count;
      else
        ++into.strict_count;
      if (rep.ord_p_d <= 1) ++into.low_order_count;
      for (const auto& c : rep.classes)
        if (!c.nonsingular) ++into.singular_class_count;
      if (!rep.inequality_holds) into.violations.push_back(describe(f, p, "inequality fails"));
      if (!rep.consistent)
        into.violations.push_back(describe(f, p, "equality differs from (i) and (ii)"));
      if (!low_order_check(rep)) into.violations.push_back(describe(f, p, "order <= 1 claim"));
      if (!multiplicity_bound_check(rep))
        into.violations.push_back(describe(f, p, "multiplicity bound at a singular class"));
      oracle_compare(f, p, rep, rng, into.oracle_mismatches);
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
}

ScanReport scan_exhaustive(const MonicInY& f, const ScanOptions& opt) {
  ScanReport rep;
  rep.field = f.field().to_string();
  scan_into(rep, f, opt);
  return rep;
}

MonicInY random_monic(const Field& field, std::size_t n, unsigned d, unsigned coeff_degree,
                      std::mt19937_64& rng) {
  std::vector<Monomial> monomials;
  Monomial m(n, 0);
  // Odometer over exponents 0..coeff_degree, keeping total degree in range.
  while (true) {
    if (monomial_degree(m) <= coeff_degree) monomials.push_back(m);
    std::size_t pos = 0;
    while (pos < n && ++m[pos] > coeff_degree) m[pos++] = 0;
    if (pos == n) break;
  }
  std::vector<MultiPoly> a;
  for (unsigned i = 0; i < d; ++i) {
    MultiPoly c(field, n);
    for (const auto& mono : monomials) c.add_term(mono, field.random_element(rng));
    a.push_back(std::move(c));
  }
  return MonicInY(std::move(a));
}

}  // namespace ordisc
