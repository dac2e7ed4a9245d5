#include "ordisc/unipoly.hpp"

#include <algorithm>

namespace ordisc {

UniPoly::UniPoly(Field field) : field_(std::move(field)) {}

UniPoly::UniPoly(Field field, std::vector<Element> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = field_.convert(c);
  trim();
}

UniPoly UniPoly::constant(const Element& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Element& c, std::size_t k) {
  std::vector<Element> v(k + 1, c.field().zero());
  v[k] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::x(const Field& field) { return monomial(field.one(), 1); }

UniPoly UniPoly::linear_root(const Element& c) {
  return UniPoly(c.field(), {-c, c.field().one()});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element UniPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : field_.zero();
}

UniPoly UniPoly::operator+(const UniPoly& b) const {
  std::vector<Element> r(std::max(c_.size(), b.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  UniPoly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(field_);
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(-c);
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& b) const { return *this + (-b); }

UniPoly UniPoly::operator*(const UniPoly& b) const {
  UniPoly out(field_);
  if (c_.empty() || b.c_.empty()) return out;
  out.c_.assign(c_.size() + b.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

UniPoly UniPoly::scaled(const Element& s) const {
  UniPoly out(field_);
  for (const auto& c : c_) out.c_.push_back(c * s);
  out.trim();
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& b) const {
  if (b.is_zero()) throw DivisionByZero();
  UniPoly q(field_);
  UniPoly r = *this;
  if (r.degree() < b.degree()) return {q, r};
  const Element inv = b.is_monic() ? field_.one() : b.leading().inverse();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  q.c_.assign(r.c_.size() - db, field_.zero());
  for (std::size_t i = r.c_.size(); i-- > db;) {
    if (r.c_[i].is_zero()) continue;
    const Element f = r.c_[i] * inv;
    q.c_[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r.c_[i - db + j] -= f * b.c_[j];
  }
  r.trim();
  q.trim();
  return {q, r};
}

bool UniPoly::operator==(const UniPoly& b) const { return c_ == b.c_; }

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
  UniPoly out(field_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out.c_.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
  out.trim();
  return out;
}

Element UniPoly::evaluate(const Element& x) const {
  const Field& f = x.field();
  Element acc = f.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + f.convert(c_[i]);
  return acc;
}

UniPoly UniPoly::converted(const Field& target) const { return UniPoly(target, c_); }

UniPoly UniPoly::pow_mod(const mpz_class& e, const UniPoly& m) const {
  UniPoly result = UniPoly::constant(field_.one()) % m;
  UniPoly base = *this % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    if (i + 1 < bits) base = (base * base) % m;
  }
  return result;
}

UniPoly UniPoly::deflate(std::size_t k) const {
  UniPoly out(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % k == 0)
      out.c_.push_back(c_[i]);
    else if (!c_[i].is_zero())
      throw InputError("deflate: exponent not divisible");
  }
  out.trim();
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Element& c = c_[i];
    if (c.is_zero()) continue;
    bool negative = c.is_negative_rational();
    const Element mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    if (i == 1)
      mono = var;
    else if (i > 1)
      mono = var + "^" + std::to_string(i);
    if (mono.empty()) {
      out += mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += (mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string()) + "*" + mono;
    }
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f.one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Element inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace ordisc
