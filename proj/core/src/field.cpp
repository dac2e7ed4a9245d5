#include "ordisc/field.hpp"

#include <algorithm>
#include <sstream>

#include "ordisc/unipoly.hpp"

namespace ordisc {

struct Field::Impl {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;
  Field base;
  std::vector<Element> modulus;
  bool is_field = true;
  mpz_class order = 0;
  std::size_t degree = 1;
};

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Element::Residue& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

// Reduce a residue polynomial modulo a monic modulus.
void reduce(Element::Residue& r, const std::vector<Element>& m) {
  const std::size_t k = m.size() - 1;
  for (std::size_t i = r.size(); i-- > k;) {
    if (r[i].is_zero()) continue;
    const Element c = r[i];
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] -= c * m[j];
  }
  if (r.size() > k) r.resize(k);
  trim(r);
}

bool is_irreducible_over(const UniPoly& f) {
  const int m = f.degree();
  if (m <= 0) return false;
  if (m == 1) return true;
  const mpz_class& q = f.field().order();
  const UniPoly x = UniPoly::x(f.field());
  // x^(q^k) mod f for k = 1..m, kept incrementally
  std::vector<UniPoly> frob(static_cast<std::size_t>(m) + 1);
  frob[0] = x % f;
  for (int k = 1; k <= m; ++k) frob[k] = frob[k - 1].pow_mod(q, f);
  if (frob[m] != frob[0]) return false;
  for (std::uint64_t r : prime_divisors(static_cast<std::size_t>(m))) {
    const UniPoly h = frob[m / r] - x;
    if (gcd(h, f).degree() != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::rationals() {
  static const Field q = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Rationals;
    return Field(impl);
  }();
  return q;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotInField("F" + std::to_string(p) + " (p must be prime)");
  if (p >= (std::uint64_t{1} << 32)) throw NotInField("prime too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Prime;
  impl->characteristic = p;
  impl->order = static_cast<unsigned long>(p);
  return Field(impl);
}

namespace {

std::vector<Element> prepare_modulus(const Field& base, std::vector<Element> modulus) {
  for (auto& c : modulus) c = base.convert(c);
  while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
  if (modulus.size() < 2) throw NotInField("modulus must have positive degree");
  if (!modulus.back().is_one()) throw NotMonic("modulus");
  return modulus;
}

}  // namespace

Field Field::extension(const Field& base, std::vector<Element> modulus) {
  if (!base.is_finite()) throw NotFiniteField();
  modulus = prepare_modulus(base, std::move(modulus));
  if (!is_irreducible_over(UniPoly(base, modulus)))
    throw NotInField("extension modulus is not irreducible");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Extension;
  impl->characteristic = base.characteristic();
  impl->base = base;
  impl->degree = modulus.size() - 1;
  mpz_pow_ui(impl->order.get_mpz_t(), base.order().get_mpz_t(), impl->degree);
  impl->modulus = std::move(modulus);
  impl->is_field = true;
  return Field(impl);
}

Field Field::quotient(const Field& base, std::vector<Element> modulus) {
  modulus = prepare_modulus(base, std::move(modulus));
  const UniPoly m(base, modulus);
  if (gcd(m, m.derivative()).degree() != 0)
    throw NotInField("quotient modulus must be squarefree");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Extension;
  impl->characteristic = base.characteristic();
  impl->base = base;
  impl->degree = modulus.size() - 1;
  if (base.is_finite())
    mpz_pow_ui(impl->order.get_mpz_t(), base.order().get_mpz_t(), impl->degree);
  impl->modulus = std::move(modulus);
  impl->is_field = impl->degree == 1;
  return Field(impl);
}

std::vector<Element> Field::find_irreducible(const Field& base, std::size_t degree) {
  if (!base.is_finite()) throw NotFiniteField();
  if (degree == 0) throw NotInField("degree must be positive");
  const auto elems = base.elements();
  const std::size_t q = elems.size();
  std::vector<std::size_t> digits(degree, 0);
  while (true) {
    std::vector<Element> m;
    for (std::size_t i = 0; i < degree; ++i) m.push_back(elems[digits[i]]);
    m.push_back(base.one());
    if (is_irreducible_over(UniPoly(base, m))) return m;
    std::size_t i = 0;
    while (i < degree && ++digits[i] == q) digits[i++] = 0;
    if (i == degree) break;
  }
  throw NotInField("no irreducible polynomial found");
}

FieldKind Field::kind() const { return impl_->kind; }
std::uint64_t Field::characteristic() const { return impl_->characteristic; }
bool Field::is_finite() const { return impl_->order != 0; }
bool Field::is_field() const { return impl_->is_field; }
const mpz_class& Field::order() const {
  if (!is_finite()) throw NotFiniteField();
  return impl_->order;
}
const Field& Field::base() const {
  if (impl_->kind != FieldKind::Extension) throw SpecMismatch("field has no base");
  return impl_->base;
}
const std::vector<Element>& Field::modulus() const {
  if (impl_->kind != FieldKind::Extension) throw SpecMismatch("field has no modulus");
  return impl_->modulus;
}
std::size_t Field::degree() const { return impl_->degree; }

Element Field::zero() const {
  switch (impl_->kind) {
    case FieldKind::Rationals: return Element(*this, mpq_class(0));
    case FieldKind::Prime: return Element(*this, std::uint64_t{0});
    case FieldKind::Extension: return Element(*this, Element::Residue{});
  }
  return {};
}

Element Field::one() const { return from_int(1); }

Element Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Element Field::from_rational(const mpq_class& q) const {
  switch (impl_->kind) {
    case FieldKind::Rationals: {
      mpq_class c = q;
      c.canonicalize();
      return Element(*this, c);
    }
    case FieldKind::Prime: {
      const std::uint64_t p = impl_->characteristic;
      mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
      if (num < 0) num += static_cast<unsigned long>(p);
      mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
      if (den == 0) throw NotInField(q.get_str() + " in F" + std::to_string(p));
      const std::uint64_t n = num.get_ui();
      const std::uint64_t dinv = pow_mod(den.get_ui(), p - 2, p);
      return Element(*this, mul_mod(n, dinv, p));
    }
    case FieldKind::Extension:
      return from_residue({base().from_rational(q)});
  }
  return {};
}

Element Field::generator() const {
  if (impl_->kind != FieldKind::Extension) throw SpecMismatch("field has no generator");
  const Field& b = base();
  return from_residue({b.zero(), b.one()});
}

Element Field::from_residue(std::vector<Element> coeffs) const {
  if (impl_->kind != FieldKind::Extension) throw SpecMismatch("not a residue ring");
  const Field& b = base();
  for (auto& c : coeffs) c = b.convert(c);
  trim(coeffs);
  reduce(coeffs, impl_->modulus);
  return Element(*this, std::move(coeffs));
}

bool Field::contains(const Field& other) const {
  if (*this == other) return true;
  if (impl_->kind == FieldKind::Extension) return base().contains(other);
  return false;
}

Element Field::convert(const Element& e) const {
  if (e.field() == *this) return e;
  if (impl_->kind == FieldKind::Extension && base().contains(e.field()))
    return from_residue({base().convert(e)});
  if (e.field().kind() == FieldKind::Rationals) return from_rational(e.rational());
  throw SpecMismatch("cannot map " + e.field().to_string() + " into " + to_string());
}

std::vector<Element> Field::elements() const {
  if (!is_finite()) throw NotFiniteField();
  std::vector<Element> out;
  if (impl_->kind == FieldKind::Prime) {
    for (std::uint64_t i = 0; i < impl_->characteristic; ++i) out.push_back(Element(*this, i));
    return out;
  }
  const auto base_elems = base().elements();
  const std::size_t k = impl_->degree;
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    Element::Residue r;
    for (std::size_t i = 0; i < k; ++i) r.push_back(base_elems[digits[i]]);
    trim(r);
    out.push_back(Element(*this, std::move(r)));
    std::size_t i = 0;
    while (i < k && ++digits[i] == base_elems.size()) digits[i++] = 0;
    if (i == k) break;
  }
  return out;
}

Element Field::random_element(std::mt19937_64& rng) const {
  if (!is_finite()) throw NotFiniteField();
  if (impl_->kind == FieldKind::Prime) {
    std::uniform_int_distribution<std::uint64_t> dist(0, impl_->characteristic - 1);
    return Element(*this, dist(rng));
  }
  Element::Residue r;
  for (std::size_t i = 0; i < impl_->degree; ++i) r.push_back(base().random_element(rng));
  trim(r);
  return Element(*this, std::move(r));
}

std::string Field::to_string() const {
  switch (impl_->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F" + std::to_string(impl_->characteristic);
    case FieldKind::Extension: {
      const std::string m = UniPoly(base(), impl_->modulus).to_string("t");
      if (base().kind() == FieldKind::Prime && impl_->is_field)
        return base().to_string() + "^" + std::to_string(impl_->degree) + ":" + m;
      return base().to_string() + "[t]/(" + m + ")";
    }
  }
  return {};
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  if (impl_->kind != other.impl_->kind) return false;
  if (impl_->characteristic != other.impl_->characteristic) return false;
  if (impl_->kind != FieldKind::Extension) return true;
  return base() == other.base() && impl_->modulus == other.impl_->modulus;
}

// -------------------------------------------------------------- Element

Element::Element(Field f, mpq_class q) : field_(std::move(f)), value_(std::move(q)) {}
Element::Element(Field f, std::uint64_t r) : field_(std::move(f)), value_(r) {}
Element::Element(Field f, Residue r) : field_(std::move(f)), value_(std::move(r)) {}

bool Element::is_zero() const {
  switch (value_.index()) {
    case 0: return sgn(std::get<0>(value_)) == 0;
    case 1: return std::get<1>(value_) == 0;
    default: return std::get<2>(value_).empty();
  }
}

bool Element::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: {
      const auto& r = std::get<2>(value_);
      return r.size() == 1 && r[0].is_one();
    }
  }
}

namespace {
void require_same(const Element& a, const Element& b) {
  if (a.field() != b.field())
    throw SpecMismatch(a.field().to_string() + " vs " + b.field().to_string());
}
}  // namespace

Element Element::operator+(const Element& b) const {
  require_same(*this, b);
  switch (value_.index()) {
    case 0: return Element(field_, mpq_class(rational() + b.rational()));
    case 1: {
      const std::uint64_t p = field_.characteristic();
      std::uint64_t s = residue() + b.residue();
      if (s >= p) s -= p;
      return Element(field_, s);
    }
    default: {
      const auto& x = residue_poly();
      const auto& y = b.residue_poly();
      Residue r(std::max(x.size(), y.size()), field_.base().zero());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
      for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
      trim(r);
      return Element(field_, std::move(r));
    }
  }
}

Element Element::operator-() const {
  switch (value_.index()) {
    case 0: return Element(field_, mpq_class(-rational()));
    case 1: {
      const std::uint64_t p = field_.characteristic();
      return Element(field_, residue() == 0 ? std::uint64_t{0} : p - residue());
    }
    default: {
      Residue r = residue_poly();
      for (auto& c : r) c = -c;
      return Element(field_, std::move(r));
    }
  }
}

Element Element::operator-(const Element& b) const { return *this + (-b); }

Element Element::operator*(const Element& b) const {
  require_same(*this, b);
  switch (value_.index()) {
    case 0: return Element(field_, mpq_class(rational() * b.rational()));
    case 1: return Element(field_, mul_mod(residue(), b.residue(), field_.characteristic()));
    default: {
      const auto& x = residue_poly();
      const auto& y = b.residue_poly();
      if (x.empty() || y.empty()) return field_.zero();
      Residue r(x.size() + y.size() - 1, field_.base().zero());
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
      trim(r);
      reduce(r, field_.modulus());
      return Element(field_, std::move(r));
    }
  }
}

Element Element::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (value_.index()) {
    case 0: return Element(field_, mpq_class(1 / rational()));
    case 1: {
      const std::uint64_t p = field_.characteristic();
      return Element(field_, pow_mod(residue(), p - 2, p));
    }
    default: {
      const Field& base = field_.base();
      const UniPoly m(base, field_.modulus());
      const UniPoly a(base, residue_poly());
      const ExtendedGcd eg = extended_gcd(a, m);
      if (eg.g.degree() != 0) {
        const UniPoly g2 = m / eg.g;
        throw ZeroDivisorSplit(field_, eg.g.coeffs(), g2.coeffs());
      }
      // s*a + t*m == 1
      return field_.from_residue(eg.s.coeffs());
    }
  }
}

Element Element::operator/(const Element& b) const {
  require_same(*this, b);
  return *this * b.inverse();
}

Element Element::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Element result = field_.one();
  Element base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
    if (i + 1 < bits) base *= base;
  }
  return result;
}

Element Element::pth_root() const {
  if (!field_.is_finite()) throw NotFiniteField();
  const mpz_class e = field_.order() / static_cast<unsigned long>(field_.characteristic());
  return pow(e);
}

ZeroTestResult Element::zero_test() const {
  if (is_zero()) return {ZeroTestKind::Zero, {}, {}};
  if (field_.is_field()) return {ZeroTestKind::Nonzero, {}, {}};
  const Field& base = field_.base();
  const UniPoly m(base, field_.modulus());
  const UniPoly g = gcd(m, UniPoly(base, residue_poly()));
  if (g.degree() == 0) return {ZeroTestKind::Nonzero, {}, {}};
  if (g.degree() == m.degree()) return {ZeroTestKind::Zero, {}, {}};
  return {ZeroTestKind::Split, g.coeffs(), (m / g).coeffs()};
}

bool Element::operator==(const Element& b) const {
  return field_ == b.field_ && value_ == b.value_;
}

bool Element::less(const Element& b) const {
  switch (value_.index()) {
    case 0: return rational() < b.rational();
    case 1: return residue() < b.residue();
    default: {
      const auto& x = residue_poly();
      const auto& y = b.residue_poly();
      if (x.size() != y.size()) return x.size() < y.size();
      for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] == y[i]) continue;
        return x[i].less(y[i]);
      }
      return false;
    }
  }
}

std::string Element::to_string() const {
  switch (value_.index()) {
    case 0: return rational().get_str();
    case 1: return std::to_string(residue());
    default: return UniPoly(field_.base(), residue_poly()).to_string("t");
  }
}

bool Element::is_compound() const {
  if (value_.index() != 2) return false;
  const auto& r = residue_poly();
  std::size_t nonzero = 0;
  for (const auto& c : r) nonzero += c.is_zero() ? 0 : 1;
  if (nonzero > 1) return true;
  for (const auto& c : r)
    if (!c.is_zero()) return c.is_compound() || c.is_negative_rational();
  return false;
}

bool Element::is_negative_rational() const {
  return value_.index() == 0 && sgn(rational()) < 0;
}

}  // namespace ordisc
