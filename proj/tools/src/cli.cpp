#include "ordisc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ordisc/analyzer.hpp"
#include "ordisc/exprparse.hpp"
#include "ordisc/local.hpp"
#include "ordisc/resultant.hpp"
#include "ordisc/universal.hpp"

namespace ordisc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string field = "Q";
  std::string point;
  bool has_point = false;
  unsigned precision = 0;
  std::uint64_t seed = 0;
  unsigned ext_max = 2;
  std::size_t budget = 20000;
  std::string format = "json";
  unsigned d = 0;
  std::string poly;
};

struct Result {
  json body;
  std::string text;
  bool consistent = true;
};

json order_json(const Order& o) { return o ? json(*o) : json("inf"); }
std::string order_text(const Order& o) { return o ? std::to_string(*o) : "inf"; }

VariableNames x_names(std::size_t n) {
  VariableNames v = VariableNames::xy(n);
  v.names.pop_back();
  return v;
}

// Number of X variables for a command that takes a point over X-space.
std::size_t infer_n(const Options& o) {
  const std::size_t seen = max_x_index(o.poly);
  if (!o.has_point) return std::max<std::size_t>(1, seen);
  const std::size_t dim = o.point.empty() ? 0 : std::count(o.point.begin(), o.point.end(), ',') + 1;
  // Commas inside alg(...) do not separate coordinates.
  std::size_t alg_commas = 0;
  for (std::size_t pos = o.point.find("alg("); pos != std::string::npos;
       pos = o.point.find("alg(", pos + 1))
    ++alg_commas;
  const std::size_t n = dim - alg_commas;
  if (n < seen) throw SpecMismatch("point has fewer coordinates than X variables");
  return n;
}

MonicInY parse_monic(const Options& o, const Field& field, std::size_t n) {
  return MonicInY::from_poly(parse_poly(o.poly, VariableNames::xy(n), field));
}

PointAffine point_or_origin(const Options& o, const Field& field, std::size_t n) {
  if (o.has_point) {
    PointAffine p = parse_point(o.point, field);
    if (p.dim() != n) throw SpecMismatch("point dimension");
    return p;
  }
  PointAffine p;
  p.coords.assign(n, field.zero());
  return p;
}

json classes_json(const std::vector<FiberClass>& classes) {
  json a = json::array();
  for (const auto& c : classes)
    a.push_back({{"factor", c.factor.to_string("Y")},
                 {"multiplicity", c.multiplicity},
                 {"nonsingular", c.nonsingular},
                 {"pDividesMult", c.p_divides_mult}});
  return a;
}

json point_report_json(const PointReport& r) {
  return {{"point", render_point(r.point)},
          {"d", r.d},
          {"ordPD", r.ord_p_d},
          {"r", r.r},
          {"lowerBound", r.lower_bound},
          {"inequality", r.inequality_holds},
          {"condI", r.cond_i},
          {"condII", r.cond_ii},
          {"equalityPredicted", r.equality_predicted},
          {"equalityObserved", r.equality_observed},
          {"consistent", r.consistent},
          {"classes", classes_json(r.classes)}};
}

std::string verdict_text(const PointReport& r) {
  std::ostringstream s;
  s << "ord_P D = " << r.ord_p_d << " ≥ d − r = " << r.lower_bound << " ["
    << (r.equality_observed ? "equality" : "strict") << "]; (i) " << (r.cond_i ? "pass" : "fail")
    << "; (ii) " << (r.cond_ii ? "pass" : "fail");
  return s.str();
}

Result cmd_disc(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = std::max<std::size_t>(1, max_x_index(o.poly));
  const MultiPoly disc = discriminant_y(parse_monic(o, field, n));
  const std::string s = render_poly(disc, x_names(n));
  return {{{"discriminant", s}}, "D = " + s, true};
}

Result cmd_univ_disc(const Options& o) {
  const UniversalDiscriminant& u = universal_discriminant(o.d);
  const std::string s = render_poly(u.poly, VariableNames::a(o.d));
  Result res{{{"d", o.d}, {"discriminant", s}}, "D~ = " + s, true};
  if (o.has_point) {
    const Field field = parse_field(o.field);
    const UniversalPointReport c = analyze_universal_point(o.d, parse_point(o.point, field).coords);
    res.body["universalPoint"] = {{"ord", c.ord},
                               {"r", c.r},
                               {"lowerBound", c.lower_bound},
                               {"inequality", c.inequality_holds},
                               {"equalityPredicted", c.equality_predicted},
                               {"equalityObserved", c.equality_observed},
                               {"consistent", c.consistent}};
    res.text += "\nord_a D~ = " + std::to_string(c.ord) + " ≥ d − r = " +
                std::to_string(c.lower_bound) + (c.equality_observed ? " [equality]" : " [strict]");
    res.consistent = c.inequality_holds && c.consistent;
  }
  return res;
}

Result cmd_order(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t seen = max_x_index(o.poly);
  const PointAffine p = parse_point(o.point, field);
  Order ord;
  if (p.dim() >= std::max<std::size_t>(seen, 1) + 1) {
    const MultiPoly f = parse_poly(o.poly, VariableNames::xy(p.dim() - 1), field);
    ord = ord_at(f, p);
  } else if (p.dim() >= std::max<std::size_t>(seen, 1)) {
    const MultiPoly f = parse_poly(o.poly, x_names(p.dim()), field);
    ord = ord_at(f, p);
  } else {
    throw SpecMismatch("point has fewer coordinates than variables");
  }
  return {{{"order", order_json(ord)}}, "ord_P = " + order_text(ord), true};
}

Result cmd_fiber(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = infer_n(o);
  const MonicInY f = parse_monic(o, field, n);
  const PointAffine p = point_or_origin(o, field, n);
  const FiberDecomposition fib = fiber_at(f, p, f.d(), o.seed);
  json j{{"point", render_point(p)},
         {"fiber", fib.fiber.to_string("Y")},
         {"r", fib.r},
         {"classes", classes_json(fib.classes)}};
  std::string text = "F(P, Y) = " + fib.fiber.to_string("Y") + "\nr = " + std::to_string(fib.r);
  if (fib.roots) {
    json roots = json::array();
    for (const auto& root : *fib.roots)
      roots.push_back({{"field", root.field.to_string()}, {"value", root.value.to_string()}});
    j["roots"] = roots;
  }
  for (const auto& c : fib.classes)
    text += "\n(" + c.factor.to_string("Y") + ")^" + std::to_string(c.multiplicity) +
            (c.nonsingular ? " nonsingular" : " singular");
  return {j, text, true};
}

Result cmd_analyze(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = infer_n(o);
  const MonicInY f = parse_monic(o, field, n);
  const PointAffine p = point_or_origin(o, field, n);
  const auto pieces = analyze_point_split(f, p);
  Result res;
  auto ok = [](const PointReport& r) {
    return r.inequality_holds && r.consistent && low_order_check(r) && multiplicity_bound_check(r);
  };
  if (pieces.size() == 1) {
    res.body = point_report_json(pieces.front().second);
    res.text = verdict_text(pieces.front().second);
    res.consistent = ok(pieces.front().second);
    return res;
  }
  res.body = {{"pieces", json::array()}};
  for (const auto& [piece, report] : pieces) {
    const std::string m = UniPoly(piece.base(), piece.modulus()).to_string("t");
    res.body["pieces"].push_back({{"modulus", m}, {"report", point_report_json(report)}});
    res.text += (res.text.empty() ? "" : "\n") + m + ": " + verdict_text(report);
    res.consistent = res.consistent && ok(report);
  }
  return res;
}

Result cmd_scan(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = std::max<std::size_t>(1, max_x_index(o.poly));
  const MonicInY f = parse_monic(o, field, n);
  ScanOptions opt;
  opt.max_ext_degree = o.ext_max;
  opt.budget = o.budget;
  opt.seed = o.seed;
  const ScanReport r = scan_exhaustive(f, opt);
  json j{{"field", r.field},
         {"pointsTested", r.points_tested},
         {"violations", r.violations},
         {"oracleMismatches", r.oracle_mismatches},
         {"equalityCount", r.equality_count},
         {"strictCount", r.strict_count},
         {"lowOrderPoints", r.low_order_count},
         {"singularClasses", r.singular_class_count}};
  std::ostringstream t;
  t << "points " << r.points_tested << ", equality " << r.equality_count << ", strict "
    << r.strict_count << ", violations " << r.violations.size() << ", oracle mismatches "
    << r.oracle_mismatches.size();
  for (const auto& v : r.violations) t << "\nviolation: " << v;
  for (const auto& v : r.oracle_mismatches) t << "\nmismatch: " << v;
  return {j, t.str(), r.violations.empty() && r.oracle_mismatches.empty()};
}

Result cmd_hensel(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = infer_n(o);
  const MonicInY f = parse_monic(o, field, n);
  const PointAffine p = point_or_origin(o, field, n);
  const unsigned cap = o.precision ? o.precision : default_cap(f, p);
  const HenselFactorization h = hensel_split(f, p, cap, o.seed);
  const MultiPoly disc = discriminant_y(f.shifted(p));
  const ProductFormulaReport pf = verify_product_formula(h, disc);
  const LocalOrderDecomposition dec = local_order_decomposition(f, p, cap, o.seed);

  json factors = json::array();
  std::string text = "cap " + std::to_string(cap);
  for (std::size_t i = 0; i < h.r(); ++i) {
    const std::string s = render_poly(h.factors[i].poly());
    factors.push_back({{"center", h.centers[i].to_string()},
                       {"degree", h.degrees[i]},
                       {"factor", s},
                       {"mu", order_json(factor_mu_tilde(h, i).value)}});
    text += "\nF_" + std::to_string(i + 1) + " = " + s;
  }
  json terms = json::array();
  for (const auto& mu : dec.rhs_terms) terms.push_back(order_json(mu.value));
  json j{{"cap", cap},
         {"factors", factors},
         {"productFormula",
          {{"productOK", pf.product_ok},
           {"resultantConstantsOK", pf.resultant_constants_ok},
           {"ordersOK", pf.orders_ok}}},
         {"decomposition",
          {{"lhs", dec.lhs}, {"muTerms", terms}, {"d", dec.d}, {"r", dec.r}, {"rhs", dec.rhs()}}}};
  text += "\nord_P D = " + std::to_string(dec.lhs) + " = " + std::to_string(dec.rhs());
  return {j, text, true};
}

Result cmd_mu(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = std::max<std::size_t>(1, max_x_index(o.poly));
  MultiPoly poly = parse_poly(o.poly, VariableNames::xy(n), field);
  if (o.has_point) {
    const PointAffine q = parse_point(o.point, field);
    if (q.dim() != n + 1) throw SpecMismatch("mu takes a point on the hypersurface (X, Y)");
    poly = taylor_shift(poly, q);
  }
  const MonicInY f = MonicInY::from_poly(poly);
  const DistinguishedPoly dp =
      o.precision ? DistinguishedPoly::truncated(TruncatedSeries(poly, n, o.precision))
                  : DistinguishedPoly::exact(f);
  const MuTilde mu = mu_tilde(dp);
  json j{{"mu", order_json(mu.value)},
         {"atLeast", mu.at_least},
         {"discOrder", order_json(mu.disc_order)},
         {"d", mu.d}};
  std::string text = std::string("mu~ ") + (mu.at_least ? ">= " : "= ") + order_text(mu.value);
  if (!mu.is_infinite()) {
    const DistinguishedVerdict v = distinguished_verdict(dp);
    j["ord0F"] = v.ord0_f;
    j["pDividesD"] = v.p_divides_d;
    j["equalityPredicted"] = v.equality_predicted;
    j["equalityObserved"] = v.equality_observed;
    text += "; ord_0 F = " + std::to_string(v.ord0_f) +
            (v.p_divides_d ? "; p divides d" : "; p does not divide d");
  }
  return {j, text, true};
}

Result cmd_criterion(const Options& o) {
  const Field field = parse_field(o.field);
  const MonicInY f = parse_monic(o, field, 1);
  const CurveReport r = curve_criterion(f);
  json w = json::array();
  std::string text = r.nonsingular ? "nonsingular" : "singular";
  for (const auto& x : r.witnesses) {
    w.push_back({{"locus", x.locus.to_string("X1")},
                 {"multiplicity", x.multiplicity},
                 {"ordPD", x.ord_p_d},
                 {"ordUniversal", x.ord_universal},
                 {"match", x.match}});
    text += "\n" + x.locus.to_string("X1") + ": ord_P D = " + std::to_string(x.ord_p_d) +
            ", ord D~ = " + std::to_string(x.ord_universal);
  }
  return {{{"nonsingular", r.nonsingular}, {"witnesses", w}}, text, true};
}

Result cmd_structure(const Options& o) {
  const StructureReport s = structure_report(o.d);
  json bounds = json::array();
  for (const auto& b : s.expansion.alpha_order_bounds)
    bounds.push_back({{"k", b.k}, {"order", order_json(b.order)}, {"bound", b.bound}, {"ok", b.ok}});
  json points = json::array();
  for (const auto& [x, y] : s.newton.points) points.push_back({x, y});
  json j{{"d", o.d},
         {"leadingCoeffOK", s.expansion.leading_coeff_ok},
         {"alphaOrderBounds", bounds},
         {"quasiHomogeneous", s.expansion.quasi_homogeneous},
         {"lastExponentOK", s.expansion.last_exponent_ok},
         {"totalDegreeOK", s.expansion.total_degree_ok},
         {"orderOK", s.expansion.order_ok},
         {"reductionOK", s.reduction.all_ok()},
         {"newtonPoints", points},
         {"endpointsOK", s.newton.endpoints_ok},
         {"strictAboveOK", s.newton.strict_above_ok}};
  std::string text = "d = " + std::to_string(o.d) + ": " + (s.all_ok() ? "all clauses pass" : "FAILED");
  text += "\nNewton points:";
  for (const auto& [x, y] : s.newton.points)
    text += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
  return {j, text, s.all_ok()};
}

Result cmd_parse(const Options& o) {
  const Field field = parse_field(o.field);
  const std::size_t n = std::max<std::size_t>(1, max_x_index(o.poly));
  const std::string s = render_poly(parse_poly(o.poly, VariableNames::xy(n), field));
  return {{{"field", field.to_string()}, {"canonical", s}}, s, true};
}

std::string error_type(const std::exception& e) {
#define ORDISC_ERROR_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  ORDISC_ERROR_NAME(DivisionByZero)
  ORDISC_ERROR_NAME(SpecMismatch)
  ORDISC_ERROR_NAME(NotFiniteField)
  ORDISC_ERROR_NAME(NotMonic)
  ORDISC_ERROR_NAME(SyntaxError)
  ORDISC_ERROR_NAME(UnknownVariable)
  ORDISC_ERROR_NAME(NonIntegerExponent)
  ORDISC_ERROR_NAME(NotInField)
  ORDISC_ERROR_NAME(FormalDegreeTooSmall)
  ORDISC_ERROR_NAME(SizeUnsupported)
  ORDISC_ERROR_NAME(CapMismatch)
  ORDISC_ERROR_NAME(DegreeUnsupported)
  ORDISC_ERROR_NAME(ExtensionDegreeExceeded)
  ORDISC_ERROR_NAME(DiscriminantIdenticallyZero)
  ORDISC_ERROR_NAME(DiscriminantZero)
  ORDISC_ERROR_NAME(RootsNotSplit)
  ORDISC_ERROR_NAME(PrecisionZero)
  ORDISC_ERROR_NAME(PrecisionInsufficient)
  ORDISC_ERROR_NAME(BudgetExceeded)
  ORDISC_ERROR_NAME(CharPUnsupported)
  ORDISC_ERROR_NAME(FormulaViolation)
  ORDISC_ERROR_NAME(ZeroDivisorSplit)
  ORDISC_ERROR_NAME(InputError)
  ORDISC_ERROR_NAME(ConsistencyError)
#undef ORDISC_ERROR_NAME
  return "Error";
}

int report_error(const Options& o, std::ostream& err, const std::string& type,
                 const std::string& message, int code) {
  if (o.format == "json")
    err << json{{"error", {{"type", type}, {"message", message}}}}.dump() << "\n";
  else
    err << "error (" << type << "): " << message << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discriminant orders of monic-in-Y hypersurfaces", "ordisc"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    Result (*fn)(const Options&);
    bool takes_poly;
  };
  const Command commands[] = {
      {"disc", "Y-discriminant of a monic polynomial", cmd_disc, true},
      {"univ-disc", "universal discriminant of degree --d", cmd_univ_disc, false},
      {"order", "order of a polynomial at a point", cmd_order, true},
      {"fiber", "fiber F(P, Y) and its squarefree classes", cmd_fiber, true},
      {"analyze", "discriminant-order verdict at a point", cmd_analyze, true},
      {"scan", "exhaustive scan over F_p and F_(p^2)", cmd_scan, true},
      {"hensel", "local factorization and product formula", cmd_hensel, true},
      {"mu", "mu~ of a distinguished polynomial", cmd_mu, true},
      {"criterion", "nonsingularity criterion for curves over Q", cmd_criterion, true},
      {"structure", "structure checks of the universal discriminant", cmd_structure, false},
      {"parse", "canonical form of a polynomial", cmd_parse, true},
  };
  const Command* chosen = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--field", o.field, "Q, F<p> or F<p>^<k>[:<modulus in t>]");
    sub->add_option("--point", o.point, "comma separated coordinates");
    sub->add_option("--precision", o.precision, "truncation cap for series");
    sub->add_option("--seed", o.seed, "seed for randomized subroutines");
    sub->add_option("--ext-max", o.ext_max, "largest extension degree scanned");
    sub->add_option("--budget", o.budget, "largest number of scanned points");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--d", o.d, "degree of the universal polynomial");
    if (c.takes_poly) sub->add_option("poly", o.poly, "polynomial in X1..Xn, Y")->required();
    sub->callback([&chosen, &c]() { chosen = &c; });
  }

  std::vector<const char*> argv{"ordisc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(o, err, "UsageError", e.what(), kExitInput);
  }
  if (!chosen) return report_error(o, err, "UsageError", "no command", kExitInput);
  for (CLI::App* sub : app.get_subcommands())
    o.has_point = o.has_point || sub->count("--point") > 0;
  if ((std::string(chosen->name) == "structure" || std::string(chosen->name) == "univ-disc") &&
      o.d == 0)
    return report_error(o, err, "UsageError", "--d is required", kExitInput);

  try {
    const Result r = chosen->fn(o);
    if (o.format == "json")
      out << r.body.dump() << "\n";
    else
      out << r.text << "\n";
    return r.consistent ? kExitOk : kExitConsistency;
  } catch (const ConsistencyError& e) {
    return report_error(o, err, error_type(e), e.what(), kExitConsistency);
  } catch (const Error& e) {
    return report_error(o, err, error_type(e), e.what(), kExitInput);
  }
}

}  // namespace ordisc::cli
