#include "ordisc/univar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordisc {

UniPoly SquarefreeDecomposition::reconstruct(const Field& field) const {
  UniPoly acc = UniPoly::constant(field.one());
  for (const auto& part : parts)
    for (unsigned i = 0; i < part.multiplicity; ++i) acc = acc * part.factor;
  return acc;
}

std::size_t SquarefreeDecomposition::distinct_roots() const {
  std::size_t r = 0;
  for (const auto& part : parts) r += static_cast<std::size_t>(part.factor.degree());
  return r;
}

UniPoly gcd_monic(const UniPoly& f, const UniPoly& g) { return gcd(f, g); }

namespace {

UniPoly pth_root_poly(const UniPoly& f) {
  const std::uint64_t p = f.field().characteristic();
  UniPoly h = f.deflate(p);
  std::vector<Element> c;
  for (const auto& e : h.coeffs()) c.push_back(e.pth_root());
  return UniPoly(f.field(), std::move(c));
}

void squarefree_into(const UniPoly& f, unsigned scale, std::vector<SquarefreePart>& out) {
  if (f.degree() <= 0) return;
  const UniPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_into(pth_root_poly(f), scale * static_cast<unsigned>(f.field().characteristic()),
                    out);
    return;
  }
  UniPoly c = gcd(f, df);
  UniPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    const UniPoly y = gcd(w, c);
    const UniPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    // Only factors whose multiplicity is a multiple of p remain.
    squarefree_into(pth_root_poly(c.monic()),
                    scale * static_cast<unsigned>(f.field().characteristic()), out);
  }
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const UniPoly& f) {
  if (f.degree() < 1) throw InputError("squarefree decomposition needs positive degree");
  if (!f.is_monic()) throw NotMonic(f.to_string());
  SquarefreeDecomposition d;
  squarefree_into(f, 1, d.parts);
  std::sort(d.parts.begin(), d.parts.end(),
            [](const SquarefreePart& a, const SquarefreePart& b) {
              return a.multiplicity < b.multiplicity;
            });
  return d;
}

std::size_t distinct_root_count(const UniPoly& f) {
  return squarefree_decompose(f.monic()).distinct_roots();
}

namespace {

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] == b.coeffs()[i]) continue;
    return a.coeffs()[i].less(b.coeffs()[i]);
  }
  return false;
}

// Pairs (product of all irreducible factors of degree i, i).
std::vector<std::pair<UniPoly, std::size_t>> distinct_degree(const UniPoly& g) {
  std::vector<std::pair<UniPoly, std::size_t>> out;
  const mpz_class& q = g.field().order();
  const UniPoly x = UniPoly::x(g.field());
  UniPoly rest = g;
  UniPoly h = x % rest;
  std::size_t i = 1;
  while (rest.degree() >= static_cast<int>(2 * i)) {
    h = h.pow_mod(q, rest);
    const UniPoly t = gcd(h - x, rest);
    if (t.degree() > 0) {
      out.push_back({t, i});
      rest = rest / t;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.push_back({rest.monic(), static_cast<std::size_t>(rest.degree())});
  return out;
}

UniPoly random_poly(const Field& f, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<Element> c;
  for (std::size_t i = 0; i < below_degree; ++i) c.push_back(f.random_element(rng));
  return UniPoly(f, std::move(c));
}

void equal_degree(const UniPoly& g, std::size_t i, std::mt19937_64& rng,
                  std::vector<UniPoly>& out) {
  if (static_cast<std::size_t>(g.degree()) == i) {
    out.push_back(g);
    return;
  }
  const Field& f = g.field();
  const mpz_class& q = f.order();
  const std::uint64_t p = f.characteristic();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  while (true) {
    const UniPoly a = random_poly(f, n, rng);
    if (a.degree() < 1) continue;
    UniPoly t = gcd(a, g);
    if (t.degree() <= 0) {
      UniPoly b(f);
      if (p == 2) {
        // Trace from F_(q^i) down to F_2.
        std::size_t k = 0;
        for (mpz_class s = q; s > 1; s /= 2) ++k;
        UniPoly term = a % g;
        b = term;
        for (std::size_t j = 1; j < k * i; ++j) {
          term = (term * term) % g;
          b = b + term;
        }
      } else {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), i);
        e = (e - 1) / 2;
        b = a.pow_mod(e, g) - UniPoly::constant(f.one());
      }
      t = gcd(b, g);
    }
    if (t.degree() > 0 && t.degree() < g.degree()) {
      equal_degree(t, i, rng, out);
      equal_degree(g / t, i, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<IrreducibleFactor> factor_finite_field(const UniPoly& f, std::mt19937_64& rng) {
  if (!f.field().is_finite() || !f.field().is_field()) throw NotFiniteField();
  std::vector<IrreducibleFactor> out;
  if (f.degree() < 1) return out;
  for (const auto& part : squarefree_decompose(f.monic()).parts) {
    for (const auto& [g, i] : distinct_degree(part.factor)) {
      std::vector<UniPoly> irr;
      equal_degree(g, i, rng, irr);
      for (auto& h : irr) out.push_back({h.monic(), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    return poly_less(a.factor, b.factor);
  });
  return out;
}

std::vector<ExplicitRoot> explicit_roots(const UniPoly& f, std::size_t max_ext_degree,
                                         std::mt19937_64& rng) {
  std::vector<ExplicitRoot> out;
  const Field& base = f.field();
  for (const auto& [g, mult] : factor_finite_field(f, rng)) {
    (void)mult;
    const std::size_t m = static_cast<std::size_t>(g.degree());
    if (m == 1) {
      out.push_back({base, -g.coeff(0)});
      continue;
    }
    if (m > max_ext_degree) throw ExtensionDegreeExceeded(m);
    const Field ext = Field::extension(base, g.coeffs());
    Element root = ext.generator();
    for (std::size_t j = 0; j < m; ++j) {
      out.push_back({ext, root});
      root = root.pow(base.order());
    }
  }
  return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::map<mpz_class, unsigned> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++primes[d];
      n /= d;
    }
  }
  if (n > 1) ++primes[n];
  std::vector<mpz_class> divs{1};
  for (const auto& [pr, e] : primes) {
    const std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= pr;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Element> rational_roots(const UniPoly& f) {
  if (f.field().kind() != FieldKind::Rationals) throw SpecMismatch("rational_roots needs Q");
  if (f.is_zero()) throw InputError("zero polynomial has every root");
  std::vector<Element> roots;
  const Field& Q = f.field();
  UniPoly g = f;
  // strip the root 0
  std::size_t low = 0;
  while (g.coeffs()[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Q.zero());
    g = UniPoly(Q, std::vector<Element>(g.coeffs().begin() + static_cast<long>(low),
                                        g.coeffs().end()));
  }
  if (g.degree() < 1) return roots;
  mpz_class den_lcm = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  const mpz_class a0 = mpq_class(g.coeffs().front().rational() * den_lcm).get_num();
  const mpz_class an = mpq_class(g.leading().rational() * den_lcm).get_num();
  std::set<mpq_class> seen;
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(an)) {
      for (int s : {1, -1}) {
        mpq_class cand(num * s, den);
        cand.canonicalize();
        if (!seen.insert(cand).second) continue;
        const Element x = Q.from_rational(cand);
        if (g.evaluate(x).is_zero()) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Element& a, const Element& b) { return a.less(b); });
  return roots;
}

std::optional<std::vector<std::pair<Element, unsigned>>> split_linear(const UniPoly& f,
                                                                      std::mt19937_64& rng) {
  std::vector<std::pair<Element, unsigned>> out;
  const Field& field = f.field();
  if (field.is_finite() && field.is_field()) {
    for (const auto& [g, m] : factor_finite_field(f, rng)) {
      if (g.degree() != 1) return std::nullopt;
      out.push_back({-g.coeff(0), m});
    }
    return out;
  }
  for (const auto& part : squarefree_decompose(f.monic()).parts) {
    if (part.factor.degree() == 1) {
      out.push_back({-part.factor.coeff(0), part.multiplicity});
      continue;
    }
    if (field.kind() != FieldKind::Rationals) return std::nullopt;
    const auto roots = rational_roots(part.factor);
    if (roots.size() != static_cast<std::size_t>(part.factor.degree())) return std::nullopt;
    for (const auto& r : roots) out.push_back({r, part.multiplicity});
  }
  return out;
}

}  // namespace ordisc
