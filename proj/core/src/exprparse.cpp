#include "ordisc/exprparse.hpp"

#include <algorithm>
#include <cctype>

namespace ordisc {

VariableNames VariableNames::xy(std::size_t n) {
  VariableNames v;
  for (std::size_t i = 1; i <= n; ++i) v.names.push_back("X" + std::to_string(i));
  v.names.push_back("Y");
  return v;
}

VariableNames VariableNames::a(std::size_t d) {
  VariableNames v;
  for (std::size_t i = 1; i <= d; ++i) v.names.push_back("A" + std::to_string(i));
  return v;
}

VariableNames VariableNames::t() { return VariableNames{{"t"}}; }

std::size_t VariableNames::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return SIZE_MAX;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::unique_ptr<ExprAST> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  using Node = std::unique_ptr<ExprAST>;

  static Node make(ExprAST::Kind k, std::size_t pos) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    n->position = pos;
    return n;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Node expr() {
    Node lhs = term();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        Node n = make(ExprAST::Kind::Sum, at);
        n->children.push_back(std::move(lhs));
        n->children.push_back(term());
        lhs = std::move(n);
      } else if (accept('-')) {
        Node n = make(ExprAST::Kind::Difference, at);
        n->children.push_back(std::move(lhs));
        n->children.push_back(term());
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = factor();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      Node n = make(ExprAST::Kind::Product, at);
      n->children.push_back(std::move(lhs));
      n->children.push_back(factor());
      lhs = std::move(n);
    }
  }

  Node factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      Node n = make(ExprAST::Kind::Negation, at);
      n->children.push_back(factor());
      return n;
    }
    Node b = base();
    skip_ws();
    const std::size_t caret = pos_;
    if (accept('^')) {
      skip_ws();
      const std::size_t epos = pos_;
      if (!at_digit()) throw NonIntegerExponent(epos);
      const std::string e = digits();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) throw NonIntegerExponent(epos);
      if (e.size() > 6) throw SyntaxError("exponent too large", epos);
      Node n = make(ExprAST::Kind::Power, caret);
      n->exponent = static_cast<unsigned>(std::stoul(e));
      n->children.push_back(std::move(b));
      return n;
    }
    return b;
  }

  Node base() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Node e = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node n = make(ExprAST::Kind::Constant, at);
      mpz_class num(digits());
      mpz_class den = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (!at_digit()) throw SyntaxError("expected denominator", pos_);
        den = mpz_class(digits());
        if (den == 0) throw SyntaxError("zero denominator", pos_);
      }
      n->value = mpq_class(num, den);
      n->value.canonicalize();
      return n;
    }
    if (c == 'Y' || c == 't') {
      ++pos_;
      Node n = make(ExprAST::Kind::Variable, at);
      n->name = std::string(1, c);
      return n;
    }
    if (c == 'X' || c == 'A') {
      ++pos_;
      if (!at_digit()) throw SyntaxError(std::string("expected index after '") + c + "'", pos_);
      Node n = make(ExprAST::Kind::Variable, at);
      n->name = std::string(1, c) + digits();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      throw UnknownVariable(std::string(s_.substr(pos_, end - pos_)));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

MultiPoly expand(const ExprAST& e, const VariableNames& vars, const Field& field) {
  const std::size_t n = vars.size();
  switch (e.kind) {
    case ExprAST::Kind::Sum:
      return expand(*e.children[0], vars, field) + expand(*e.children[1], vars, field);
    case ExprAST::Kind::Difference:
      return expand(*e.children[0], vars, field) - expand(*e.children[1], vars, field);
    case ExprAST::Kind::Product:
      return expand(*e.children[0], vars, field) * expand(*e.children[1], vars, field);
    case ExprAST::Kind::Power:
      return expand(*e.children[0], vars, field).pow(e.exponent);
    case ExprAST::Kind::Negation:
      return -expand(*e.children[0], vars, field);
    case ExprAST::Kind::Constant:
      return MultiPoly::constant(field.from_rational(e.value), n);
    case ExprAST::Kind::Variable: {
      const std::size_t idx = vars.index_of(e.name);
      if (idx != SIZE_MAX) return MultiPoly::variable(field, n, idx);
      if (e.name == "t" && field.kind() == FieldKind::Extension)
        return MultiPoly::constant(field.generator(), n);
      throw UnknownVariable(e.name);
    }
  }
  throw SyntaxError("bad node", e.position);
}

}  // namespace

std::unique_ptr<ExprAST> parse_expr(std::string_view text) { return Parser(text).parse(); }

MultiPoly parse_poly(std::string_view text, const VariableNames& vars, const Field& field) {
  const auto ast = parse_expr(text);
  return expand(*ast, vars, field);
}

std::size_t max_x_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'X') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 8)
      v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

MultiPoly parse_poly(std::string_view text, const Field& field, std::size_t n) {
  if (n == SIZE_MAX) n = std::max<std::size_t>(1, max_x_index(text));
  return parse_poly(text, VariableNames::xy(n), field);
}

namespace {

std::string render_monomial(const Monomial& m, const VariableNames& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string render_poly(const MultiPoly& f, const VariableNames& vars) {
  if (vars.size() != f.nvars()) throw SpecMismatch("variable names do not match nvars");
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Element>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
    const unsigned da = monomial_degree(a->first), db = monomial_degree(b->first);
    if (da != db) return da > db;
    return std::lexicographical_compare(b->first.rbegin(), b->first.rend(), a->first.rbegin(),
                                        a->first.rend());
  });
  std::string out;
  for (const auto* t : terms) {
    const Element& c = t->second;
    const bool negative = c.is_negative_rational();
    const Element mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = render_monomial(t->first, vars);
    const std::string coef = mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    if (mono.empty())
      out += coef;
    else if (mag.is_one())
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

std::string render_poly(const MultiPoly& f) {
  if (f.nvars() == 0) return render_poly(f, VariableNames{});
  return render_poly(f, VariableNames::xy(f.nvars() - 1));
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Element> univariate_coeffs(std::string_view text, const Field& base) {
  const MultiPoly m = parse_poly(text, VariableNames::t(), base);
  return m.to_univariate().coeffs();
}

std::uint64_t parse_natural(std::string_view s, std::size_t offset) {
  if (s.empty()) throw SyntaxError("expected a number", offset);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw SyntaxError("expected a digit", offset + i);
    if (v > (UINT64_MAX - 9) / 10) throw SyntaxError("number too large", offset + i);
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
  }
  return v;
}

}  // namespace

Field parse_field(std::string_view spec) {
  spec = trim_view(spec);
  if (spec == "Q") return Field::rationals();
  if (spec.empty() || spec[0] != 'F') throw SyntaxError("field must be Q or F<p>", 0);
  const std::size_t caret = spec.find('^');
  const std::size_t p_end = caret == std::string_view::npos ? spec.size() : caret;
  const Field prime = Field::prime(parse_natural(spec.substr(1, p_end - 1), 1));
  if (caret == std::string_view::npos) return prime;
  const std::size_t colon = spec.find(':', caret);
  const std::size_t k_end = colon == std::string_view::npos ? spec.size() : colon;
  const std::uint64_t k = parse_natural(spec.substr(caret + 1, k_end - caret - 1), caret + 1);
  if (k == 0 || k > 64) throw SyntaxError("extension degree out of range", caret + 1);
  if (k == 1 && colon == std::string_view::npos) return prime;
  std::vector<Element> modulus;
  if (colon == std::string_view::npos) {
    modulus = Field::find_irreducible(prime, k);
  } else {
    modulus = univariate_coeffs(spec.substr(colon + 1), prime);
    if (modulus.size() != k + 1) throw NotInField("modulus degree differs from k");
  }
  return Field::extension(prime, std::move(modulus));
}

Element parse_element(std::string_view text, const Field& field) {
  const MultiPoly m = parse_poly(text, VariableNames{}, field);
  return m.coeff(Monomial{});
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

PointAffine parse_point(std::string_view text, const Field& field) {
  text = trim_view(text);
  PointAffine p;
  if (text.empty()) return p;
  struct Pending {
    bool alg;
    std::string_view modulus, value;
  };
  std::vector<Pending> coords;
  std::optional<std::vector<Element>> alg_modulus;
  for (std::string_view part : split_top_level(text)) {
    part = trim_view(part);
    if (part.substr(0, 4) == "alg(") {
      if (part.back() != ')') throw SyntaxError("expected ')' closing alg(", 0);
      const auto inner = split_top_level(part.substr(4, part.size() - 5));
      if (inner.size() != 2) throw SyntaxError("alg(<modulus>, <residue>) takes two arguments", 0);
      auto m = univariate_coeffs(inner[0], field);
      if (alg_modulus && *alg_modulus != m)
        throw NotInField("alg coordinates must share one modulus");
      alg_modulus = std::move(m);
      coords.push_back({true, inner[0], inner[1]});
    } else {
      coords.push_back({false, {}, part});
    }
  }
  const Field target = alg_modulus ? Field::quotient(field, *alg_modulus) : field;
  for (const auto& c : coords) {
    if (c.alg)
      p.coords.push_back(target.from_residue(univariate_coeffs(c.value, field)));
    else
      p.coords.push_back(target.convert(parse_element(c.value, field)));
  }
  return p;
}

std::string render_point(const PointAffine& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    const Element& c = p.coords[i];
    const Field& f = c.field();
    if (f.kind() == FieldKind::Extension && !f.is_field()) {
      out += "alg(" + UniPoly(f.base(), f.modulus()).to_string("t") + "," +
             UniPoly(f.base(), c.residue_poly()).to_string("t") + ")";
    } else {
      out += c.to_string();
    }
  }
  return out;
}

}  // namespace ordisc
