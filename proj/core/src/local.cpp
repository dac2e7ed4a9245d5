#include "ordisc/local.hpp"

#include <algorithm>

#include "ordisc/resultant.hpp"
#include "ordisc/univar.hpp"

namespace ordisc {

namespace {

PointAffine origin(const Field& field, std::size_t n) {
  PointAffine p;
  p.coords.assign(n, field.zero());
  return p;
}

// F(0, Y) for a polynomial in n + 1 variables with Y last.
UniPoly fiber_at_origin(const MultiPoly& f, std::size_t n) {
  const std::vector<Element> zeros(n, f.field().zero());
  return f.evaluate_prefix(zeros).to_univariate();
}

bool is_pure_power(const UniPoly& f, unsigned d) {
  return f == UniPoly::monomial(f.field().one(), d);
}

// Remainder of m (Y last) on division by a monic polynomial g in Y.
MultiPoly reduce_mod_y(const MultiPoly& m, const UniPoly& g) {
  const std::size_t y = m.nvars() - 1;
  if (m.is_zero()) return m;
  auto c = m.coefficients_in(y);
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  for (std::size_t k = c.size(); k-- > dg;) {
    if (c[k].is_zero()) continue;
    const MultiPoly lead = c[k];
    for (std::size_t j = 0; j < dg; ++j)
      if (!g.coeff(j).is_zero()) c[k - dg + j] -= lead.scaled(g.coeff(j));
    c[k] = lead.zero();
  }
  c.resize(std::max<std::size_t>(dg, 1), MultiPoly(m.field(), y));
  return MultiPoly::from_last_coefficients(c);
}

std::vector<std::pair<Element, unsigned>> split_fiber(const UniPoly& fiber, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto roots = split_linear(fiber, rng);
  if (!roots) throw RootsNotSplit();
  std::sort(roots->begin(), roots->end(),
            [](const auto& a, const auto& b) { return a.first.less(b.first); });
  return *roots;
}

Order series_order_sum(const std::vector<Order>& orders) {
  unsigned s = 0;
  for (const auto& o : orders) {
    if (!o) return std::nullopt;
    s += *o;
  }
  return s;
}

}  // namespace

DistinguishedPoly DistinguishedPoly::exact(MonicInY f) {
  if (!is_pure_power(fiber_at_origin(f.to_poly(), f.n()), f.d()))
    throw InputError("not distinguished: F(0, Y) != Y^d");
  DistinguishedPoly p;
  p.field_ = f.field();
  p.n_ = f.n();
  p.d_ = f.d();
  p.exact_ = std::move(f);
  return p;
}

DistinguishedPoly DistinguishedPoly::truncated(const TruncatedSeries& series) {
  const MultiPoly& f = series.poly();
  if (f.nvars() != series.series_vars() + 1)
    throw SpecMismatch("series must be in X1..Xn and Y");
  if (series.cap() == 0) throw PrecisionZero();
  const std::size_t n = series.series_vars();
  const unsigned d = f.degree_in(n);
  if (d == 0) throw InputError("Y-degree must be positive");
  auto c = f.coefficients_in(n);
  if (!(c[d].is_constant() && c[d].coeff(Monomial(n, 0)).is_one())) throw NotMonic("series");
  if (!is_pure_power(fiber_at_origin(f, n), d))
    throw InputError("not distinguished: F(0, Y) != Y^d");
  DistinguishedPoly p;
  p.field_ = f.field();
  p.n_ = n;
  p.d_ = d;
  p.series_ = series;
  return p;
}

MuTilde mu_tilde(const DistinguishedPoly& f) {
  MuTilde mu;
  mu.d = f.d();
  if (f.is_exact()) {
    const MultiPoly disc = discriminant_y(f.poly());
    mu.disc_order = disc.low_degree();
  } else {
    const TruncatedSeries& s = f.series();
    std::vector<TruncatedSeries> coeffs;
    for (const auto& c : s.poly().coefficients_in(f.n()))
      coeffs.emplace_back(c, f.n(), s.cap());
    const TruncatedSeries disc = discriminant_y(std::span<const TruncatedSeries>(coeffs));
    mu.disc_order = disc.order();
    if (!mu.disc_order) {
      if (s.cap() < f.d()) throw PrecisionInsufficient(s.cap());
      mu.value = s.cap() - f.d() + 1;
      mu.at_least = true;
      return mu;
    }
  }
  if (!mu.disc_order) return mu;
  if (*mu.disc_order + 1 < f.d())
    throw FormulaViolation("ord_0 D = " + std::to_string(*mu.disc_order) + " < d - 1");
  mu.value = *mu.disc_order + 1 - f.d();
  return mu;
}

DistinguishedVerdict distinguished_verdict(const DistinguishedPoly& f) {
  DistinguishedVerdict v;
  v.mu = mu_tilde(f);
  if (v.mu.is_infinite()) throw DiscriminantZero();
  Order ord;
  if (f.is_exact()) {
    ord = f.poly().to_poly().low_degree();
  } else {
    if (f.series().cap() <= f.d()) throw PrecisionInsufficient(f.series().cap());
    ord = f.series().poly().low_degree();
  }
  v.ord0_f = *ord;
  const std::uint64_t p = f.field().characteristic();
  v.p_divides_d = p != 0 && f.d() % p == 0;
  v.equality_predicted = v.ord0_f == 1 && !v.p_divides_d;
  v.equality_observed = !v.mu.at_least && *v.mu.value == 0;
  if (v.equality_predicted != v.equality_observed)
    throw FormulaViolation("mu~ == 0 does not match ord_0 F == 1 and p not dividing d");
  return v;
}

std::vector<TruncatedSeries> HenselFactorization::y_coefficients(std::size_t i) const {
  std::vector<TruncatedSeries> out;
  for (const auto& c : factors.at(i).poly().coefficients_in(n)) out.emplace_back(c, n, cap);
  return out;
}

TruncatedSeries HenselFactorization::discriminant(std::size_t i) const {
  const auto c = y_coefficients(i);
  return discriminant_y(std::span<const TruncatedSeries>(c));
}

TruncatedSeries HenselFactorization::resultant(std::size_t i, std::size_t j) const {
  const auto ci = y_coefficients(i);
  const auto cj = y_coefficients(j);
  return resultant_y<TruncatedSeries>(ci, cj, degrees.at(i), degrees.at(j), ci.front());
}

TruncatedSeries HenselFactorization::product() const {
  TruncatedSeries acc = factors.front().one();
  for (const auto& f : factors) acc = series_mul(acc, f);
  return acc;
}

HenselFactorization hensel_split(const MonicInY& f, const PointAffine& p, unsigned cap,
                                 std::uint64_t seed) {
  if (cap == 0) throw PrecisionZero();
  if (p.dim() != f.n()) throw SpecMismatch("point dimension");
  const std::size_t n = f.n();
  const MonicInY shifted = f.shifted(p);
  const Field& field = shifted.field();
  const MultiPoly target = shifted.to_poly();

  HenselFactorization h;
  h.cap = cap;
  h.n = n;
  h.field = field;
  const auto roots = split_fiber(shifted.at(origin(field, n)), seed);
  for (const auto& [b, m] : roots) {
    h.centers.push_back(b);
    h.degrees.push_back(m);
  }
  if (roots.size() == 1) {
    h.factors.emplace_back(target, n, cap);
    return h;
  }

  const std::size_t r = roots.size();
  std::vector<UniPoly> g;
  for (const auto& [b, m] : roots) {
    UniPoly acc = UniPoly::constant(field.one());
    for (unsigned k = 0; k < m; ++k) acc = acc * UniPoly::linear_root(b);
    g.push_back(acc);
  }
  std::vector<MultiPoly> cofactor;  // G_i^{-1} mod g_i
  std::vector<MultiPoly> lifted;
  for (std::size_t i = 0; i < r; ++i) {
    UniPoly others = UniPoly::constant(field.one());
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = others * g[j];
    const ExtendedGcd e = extended_gcd(others, g[i]);
    if (e.g.degree() != 0) throw FormulaViolation("initial Hensel factors not coprime");
    cofactor.push_back(MultiPoly::from_univariate(e.s % g[i], n + 1, n));
    lifted.push_back(MultiPoly::from_univariate(g[i], n + 1, n));
  }

  for (unsigned k = 1; k < cap; ++k) {
    MultiPoly prod = MultiPoly::constant(field.one(), n + 1);
    for (const auto& fi : lifted) prod = (prod * fi).truncated(n, k + 1);
    const MultiPoly err = (target - prod).homogeneous_part(n, k);
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i] += reduce_mod_y(err * cofactor[i], g[i]);
  }

  for (const auto& fi : lifted) h.factors.emplace_back(fi, n, cap);
  if (h.product() != TruncatedSeries(target, n, cap))
    throw FormulaViolation("Hensel product differs from F");
  return h;
}

ProductFormulaReport verify_product_formula(const HenselFactorization& h, const MultiPoly& d) {
  ProductFormulaReport rep;
  const TruncatedSeries disc(d.converted(h.field), h.n, h.cap);
  TruncatedSeries rhs = disc.one();
  for (std::size_t i = 0; i < h.r(); ++i) {
    const TruncatedSeries di = h.discriminant(i);
    rep.factor_orders.push_back(di.order());
    rhs = series_mul(rhs, di);
  }
  rep.resultant_constants_ok = true;
  const Monomial zero(h.n, 0);
  for (std::size_t i = 0; i < h.r(); ++i) {
    for (std::size_t j = i + 1; j < h.r(); ++j) {
      const TruncatedSeries rij = h.resultant(i, j);
      rhs = series_mul(rhs, series_mul(rij, rij));
      const Element expected =
          (h.centers[i] - h.centers[j]).pow(static_cast<unsigned long>(h.degrees[i]) * h.degrees[j]);
      const Element at0 = rij.poly().coeff(zero);
      if (at0 != expected || at0.is_zero()) rep.resultant_constants_ok = false;
    }
  }
  rep.product_ok = rhs == disc;
  rep.disc_order = disc.order();
  rep.orders_ok = !rep.disc_order || series_order_sum(rep.factor_orders) == rep.disc_order;
  if (!rep.product_ok) throw FormulaViolation("D != prod D_i prod R_ij^2 mod (X)^cap");
  if (!rep.resultant_constants_ok) throw FormulaViolation("R_ij(0) != (b_i - b_j)^(d_i d_j)");
  if (!rep.orders_ok) throw FormulaViolation("ord_0 D != sum ord_0 D_i");
  return rep;
}

MuTilde factor_mu_tilde(const HenselFactorization& h, std::size_t i) {
  PointAffine q = origin(h.field, h.n);
  q.coords.push_back(h.centers.at(i));
  const MultiPoly centered = taylor_shift(h.factors.at(i).poly(), q);
  return mu_tilde(DistinguishedPoly::truncated(TruncatedSeries(centered, h.n, h.cap)));
}

unsigned LocalOrderDecomposition::rhs() const {
  unsigned s = d;
  for (const auto& mu : rhs_terms) s += *mu.value;
  return s - static_cast<unsigned>(r);
}

unsigned default_cap(const MonicInY& f, const PointAffine& p) {
  const MultiPoly disc = discriminant_y(f);
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  return *ord_at(disc, p) + 4;
}

LocalOrderDecomposition local_order_decomposition(const MonicInY& f, const PointAffine& p,
                                                  std::optional<unsigned> cap,
                                                  std::uint64_t seed) {
  if (p.dim() != f.n()) throw SpecMismatch("point dimension");
  const MultiPoly disc = discriminant_y(f);
  if (disc.is_zero()) throw DiscriminantIdenticallyZero();
  LocalOrderDecomposition out;
  out.lhs = *ord_at(disc, p);
  out.cap = cap.value_or(out.lhs + 4);
  if (out.cap == 0) throw PrecisionZero();
  out.d = f.d();

  const Field field = p.field(f.field());
  const auto roots = split_fiber(f.at(p), seed);
  out.r = roots.size();
  const MultiPoly whole = f.to_poly();
  for (const auto& [b, m] : roots) {
    out.centers.push_back(b);
    PointAffine q = p;
    q.coords.push_back(field.convert(b));
    const MonicInY at_q = MonicInY::from_poly(taylor_shift(whole, q));
    MuTilde mu;
    if (roots.size() == 1) {
      mu = mu_tilde(DistinguishedPoly::exact(at_q));
    } else {
      const HenselFactorization h = hensel_split(at_q, origin(field, f.n()), out.cap, seed);
      std::size_t local = h.r();
      for (std::size_t i = 0; i < h.r(); ++i)
        if (h.centers[i].is_zero()) local = i;
      if (local == h.r() || h.degrees[local] != m)
        throw FormulaViolation("fiber point lost after translation");
      mu = factor_mu_tilde(h, local);
    }
    if (mu.at_least) throw PrecisionInsufficient(out.cap);
    if (mu.is_infinite()) throw DiscriminantIdenticallyZero();
    out.rhs_terms.push_back(mu);
  }
  if (out.lhs != out.rhs())
    throw FormulaViolation("ord_P D = " + std::to_string(out.lhs) + " but the local sum is " +
                           std::to_string(out.rhs()));
  return out;
}

}  // namespace ordisc
