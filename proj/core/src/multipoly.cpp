#include "ordisc/multipoly.hpp"

#include <algorithm>

namespace ordisc {

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw SpecMismatch("polynomials in " + std::to_string(a.nvars()) + " and " +
                       std::to_string(b.nvars()) + " variables");
  if (a.field() != b.field())
    throw SpecMismatch(a.field().to_string() + " vs " + b.field().to_string());
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

}  // namespace

MultiPoly::MultiPoly(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

MultiPoly MultiPoly::constant(const Element& c, std::size_t nvars) {
  MultiPoly p(c.field(), nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(field.one(), std::move(m));
}

MultiPoly MultiPoly::monomial(const Element& c, Monomial m) {
  MultiPoly p(c.field(), m.size());
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::from_univariate(const UniPoly& f, std::size_t nvars, std::size_t var) {
  MultiPoly p(f.field(), nvars);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    Monomial m(nvars, 0);
    m[var] = static_cast<std::uint32_t>(k);
    p.add_term(m, f.coeffs()[k]);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Element MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Element& c) {
  if (m.size() != nvars_) throw SpecMismatch("exponent vector length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  require_compatible(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  require_compatible(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& b) const {
  MultiPoly r = *this;
  r += b;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& b) const {
  MultiPoly r = *this;
  r -= b;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& b) const {
  require_compatible(*this, b);
  MultiPoly r(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(add_monomials(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Element& s) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = one();
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& b) const {
  return nvars_ == b.nvars_ && terms_ == b.terms_;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& b) const {
  require_compatible(*this, b);
  if (b.is_zero()) throw DivisionByZero();
  const auto& [lead_m, lead_c] = *b.terms_.rbegin();
  const Element lead_inv = lead_c.inverse();
  MultiPoly q(field_, nvars_);
  MultiPoly r = *this;
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    Monomial t(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < lead_m[i]) throw InputError("polynomial division is not exact");
      t[i] = rm[i] - lead_m[i];
    }
    const Element f = rc * lead_inv;
    q.add_term(t, f);
    for (const auto& [bm, bc] : b.terms_) r.add_term(add_monomials(bm, t), -(f * bc));
  }
  return q;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Order MultiPoly::low_degree(std::size_t vars) const {
  Order best;
  for (const auto& [m, c] : terms_) {
    const unsigned d = monomial_degree(m, vars);
    if (!best || d < *best) best = d;
  }
  return best;
}

Element MultiPoly::evaluate(std::span<const Element> point) const {
  if (point.size() != nvars_) throw SpecMismatch("point dimension");
  const Field target = point.empty() ? field_ : point.front().field();
  return evaluate_prefix(point).converted(target).coeff(Monomial{});
}

MultiPoly MultiPoly::evaluate_prefix(std::span<const Element> values) const {
  const std::size_t k = values.size();
  if (k > nvars_) throw SpecMismatch("too many values");
  const Field target = k == 0 ? field_ : values.front().field();
  for (const auto& v : values)
    if (v.field() != target) throw SpecMismatch("point coordinates in different fields");
  std::vector<std::vector<Element>> powers(k);
  for (std::size_t i = 0; i < k; ++i) powers[i].push_back(target.one());
  MultiPoly r(target, nvars_ - k);
  for (const auto& [m, c] : terms_) {
    Element acc = target.convert(c);
    for (std::size_t i = 0; i < k && !acc.is_zero(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
      acc *= pw[m[i]];
    }
    r.add_term(Monomial(m.begin() + static_cast<long>(k), m.end()), acc);
  }
  return r;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("variable index out of range");
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    r.add_term(dm, c * field_.from_int(static_cast<long>(m[var])));
  }
  return r;
}

MultiPoly MultiPoly::converted(const Field& target) const {
  if (target == field_) return *this;
  MultiPoly r(target, nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, target.convert(c));
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  if (var >= nvars_) throw InputError("variable index out of range");
  std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(field_, nvars_ - 1));
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    rest.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var) rest.push_back(m[i]);
    out[m[var]].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::from_last_coefficients(const std::vector<MultiPoly>& coeffs) {
  if (coeffs.empty()) throw InputError("empty coefficient list");
  const std::size_t n = coeffs.front().nvars();
  MultiPoly r(coeffs.front().field(), n + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial e = m;
      e.push_back(static_cast<std::uint32_t>(k));
      r.add_term(e, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::with_extra_vars(std::size_t extra) const {
  MultiPoly r(field_, nvars_ + extra);
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(nvars_ + extra, 0);
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

MultiPoly MultiPoly::renamed(std::span<const std::size_t> target, std::size_t nvars) const {
  if (target.size() != nvars_) throw InputError("renaming needs one target per variable");
  MultiPoly r(field_, nvars);
  for (const auto& [m, c] : terms_) {
    Monomial e(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e[target[i]] += m[i];
    r.add_term(e, c);
  }
  return r;
}

MultiPoly MultiPoly::truncated(std::size_t series_vars, unsigned cap) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m, series_vars) < cap) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::homogeneous_part(std::size_t series_vars, unsigned k) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m, series_vars) == k) r.terms_.emplace(m, c);
  return r;
}

UniPoly MultiPoly::to_univariate() const {
  if (nvars_ != 1) throw SpecMismatch("expected a univariate polynomial");
  std::vector<Element> c(degree_in(0) + 1, field_.zero());
  for (const auto& [m, v] : terms_) c[m[0]] = v;
  return UniPoly(field_, std::move(c));
}

// ----------------------------------------------------------------- points

Field PointAffine::field(const Field& fallback) const {
  if (coords.empty()) return fallback;
  const Field& f = coords.front().field();
  for (const auto& c : coords)
    if (c.field() != f) throw SpecMismatch("point coordinates in different fields");
  return f;
}

// -------------------------------------------------------------- MonicInY

MonicInY::MonicInY(std::vector<MultiPoly> a) : a_(std::move(a)) {
  if (a_.empty()) throw InputError("Y-degree must be positive");
  field_ = a_.front().field();
  n_ = a_.front().nvars();
  for (const auto& c : a_) {
    if (c.nvars() != n_) throw SpecMismatch("coefficient variable count");
    if (c.field() != field_) throw SpecMismatch("coefficient field");
  }
}

MonicInY MonicInY::from_poly(const MultiPoly& f) {
  if (f.nvars() == 0) throw InputError("polynomial has no Y variable");
  const std::size_t y = f.nvars() - 1;
  auto c = f.coefficients_in(y);
  const std::size_t d = c.size() - 1;
  if (d == 0) throw InputError("Y-degree must be positive");
  if (!(c[d].is_constant() && !c[d].is_zero() && c[d].coeff(Monomial(y, 0)).is_one()))
    throw NotMonic("leading Y coefficient is not 1");
  std::vector<MultiPoly> a;
  for (std::size_t i = 1; i <= d; ++i) a.push_back(c[d - i]);
  return MonicInY(std::move(a));
}

std::vector<MultiPoly> MonicInY::y_coeffs() const {
  std::vector<MultiPoly> c;
  for (std::size_t i = a_.size(); i-- > 0;) c.push_back(a_[i]);
  c.push_back(MultiPoly::constant(field_.one(), n_));
  return c;
}

MultiPoly MonicInY::to_poly() const { return MultiPoly::from_last_coefficients(y_coeffs()); }

UniPoly MonicInY::at(const PointAffine& p) const {
  if (p.dim() != n_) throw SpecMismatch("point dimension");
  const Field target = p.field(field_);
  if (!target.contains(field_)) throw SpecMismatch("point field does not contain F's field");
  std::vector<Element> c;
  for (std::size_t i = a_.size(); i-- > 0;) c.push_back(a_[i].evaluate(p.coords));
  c.push_back(target.one());
  return UniPoly(target, std::move(c));
}

MonicInY MonicInY::converted(const Field& target) const {
  std::vector<MultiPoly> a;
  for (const auto& c : a_) a.push_back(c.converted(target));
  return MonicInY(std::move(a));
}

MonicInY MonicInY::shifted(const PointAffine& p) const {
  std::vector<MultiPoly> a;
  for (const auto& c : a_) a.push_back(taylor_shift(c, p));
  return MonicInY(std::move(a));
}

// ------------------------------------------------------------ operations

namespace {

MultiPoly shift_variable(const MultiPoly& f, std::size_t var, const Element& a) {
  const std::size_t n = f.nvars();
  std::map<std::uint32_t, MultiPoly> by_power;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    auto [it, inserted] = by_power.try_emplace(m[var], f.field(), n);
    it->second.add_term(rest, c);
  }
  if (by_power.empty()) return f;
  const std::uint32_t top = by_power.rbegin()->first;
  MultiPoly result(f.field(), n);
  for (std::uint32_t k = top + 1; k-- > 0;) {
    // result = result * (x_var + a) + c_k
    MultiPoly next(f.field(), n);
    for (const auto& [m, c] : result.terms()) {
      Monomial up = m;
      ++up[var];
      next.add_term(up, c);
      next.add_term(m, c * a);
    }
    if (auto it = by_power.find(k); it != by_power.end()) next += it->second;
    result = std::move(next);
  }
  return result;
}

}  // namespace

MultiPoly taylor_shift(const MultiPoly& f, const PointAffine& p) {
  if (p.dim() > f.nvars()) throw SpecMismatch("point has more coordinates than variables");
  const Field target = p.field(f.field());
  if (!target.contains(f.field()) && f.field().kind() != FieldKind::Rationals)
    throw SpecMismatch("point field does not contain the polynomial's field");
  MultiPoly g = f.converted(target);
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (!p.coords[i].is_zero()) g = shift_variable(g, i, p.coords[i]);
  return g;
}

Order ord_at(const MultiPoly& f, const PointAffine& p) {
  const MultiPoly g = taylor_shift(f, p);
  if (g.field().is_field()) return g.low_degree();
  std::map<unsigned, std::vector<const Element*>> layers;
  for (const auto& [m, c] : g.terms()) layers[monomial_degree(m)].push_back(&c);
  for (const auto& [deg, coeffs] : layers) {
    std::optional<ZeroTestResult> split;
    for (const Element* c : coeffs) {
      ZeroTestResult z = c->zero_test();
      if (z.kind == ZeroTestKind::Nonzero) return deg;
      if (z.kind == ZeroTestKind::Split && !split) split = std::move(z);
    }
    if (split) throw ZeroDivisorSplit(g.field(), split->g1, split->g2);
  }
  return std::nullopt;
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  return f.partial_derivative(var);
}

// ------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(const MultiPoly& poly, std::size_t series_vars, unsigned cap)
    : poly_(poly.truncated(series_vars, cap)), series_vars_(series_vars), cap_(cap) {
  if (series_vars > poly.nvars()) throw InputError("series_vars exceeds nvars");
}

void TruncatedSeries::check(const TruncatedSeries& b) const {
  if (cap_ != b.cap_ || series_vars_ != b.series_vars_) throw CapMismatch();
}

TruncatedSeries TruncatedSeries::zero() const {
  return TruncatedSeries(poly_.zero(), series_vars_, cap_);
}

TruncatedSeries TruncatedSeries::one() const {
  return TruncatedSeries(poly_.one(), series_vars_, cap_);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& b) const {
  check(b);
  TruncatedSeries r = *this;
  r.poly_ += b.poly_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& b) const {
  check(b);
  TruncatedSeries r = *this;
  r.poly_ -= b.poly_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  r.poly_ = -poly_;
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& b) const {
  return series_mul(*this, b);
}

bool TruncatedSeries::operator==(const TruncatedSeries& b) const {
  return cap_ == b.cap_ && series_vars_ == b.series_vars_ && poly_ == b.poly_;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.cap() != g.cap() || f.series_vars() != g.series_vars()) throw CapMismatch();
  if (f.poly().field() != g.poly().field() || f.poly().nvars() != g.poly().nvars())
    throw SpecMismatch("series over different rings");
  const std::size_t k = f.series_vars();
  MultiPoly r(f.field(), f.poly().nvars());
  for (const auto& [ma, ca] : f.poly().terms()) {
    const unsigned da = monomial_degree(ma, k);
    for (const auto& [mb, cb] : g.poly().terms()) {
      if (da + monomial_degree(mb, k) >= f.cap()) continue;
      Monomial m(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return TruncatedSeries(r, k, f.cap());
}

}  // namespace ordisc
