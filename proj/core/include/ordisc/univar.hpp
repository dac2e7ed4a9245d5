#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ordisc/unipoly.hpp"

namespace ordisc {

struct SquarefreePart {
  UniPoly factor;  // monic squarefree
  unsigned multiplicity;
};

/// f == prod factor^multiplicity, parts pairwise coprime, multiplicities
/// distinct, sorted by increasing multiplicity.
struct SquarefreeDecomposition {
  std::vector<SquarefreePart> parts;

  UniPoly reconstruct(const Field& field) const;
  /// Number of distinct roots in an algebraic closure.
  std::size_t distinct_roots() const;
};

/// Monic gcd with gcd(f, 0) == monic(f).
UniPoly gcd_monic(const UniPoly& f, const UniPoly& g);

/// Yun's algorithm in characteristic 0; in characteristic p the remaining
/// p-th power part is deflated, p-th roots are taken coefficientwise, and
/// the recursion's multiplicities are multiplied by p.
SquarefreeDecomposition squarefree_decompose(const UniPoly& f);

std::size_t distinct_root_count(const UniPoly& f);

struct IrreducibleFactor {
  UniPoly factor;
  unsigned multiplicity;
};

/// Complete factorization over a finite field: squarefree decomposition,
/// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
/// driven by `rng`. Factors sorted by (degree, coefficients).
std::vector<IrreducibleFactor> factor_finite_field(const UniPoly& f, std::mt19937_64& rng);

struct ExplicitRoot {
  Field field;  // field holding the root
  Element value;
};

/// All deg(f) roots of a squarefree f over F_q. An irreducible factor g of
/// degree m > 1 contributes the class of t in F_q[t]/(g) and its Frobenius
/// conjugates t^(q^j).
std::vector<ExplicitRoot> explicit_roots(const UniPoly& f, std::size_t max_ext_degree,
                                         std::mt19937_64& rng);

/// Roots of f lying in its own field of definition, with multiplicities,
/// when f splits completely into linear factors there; nullopt otherwise.
/// Over Q this uses the rational root test, over finite fields the full
/// factorization; other rings only recognize linear squarefree parts.
std::optional<std::vector<std::pair<Element, unsigned>>> split_linear(const UniPoly& f,
                                                                      std::mt19937_64& rng);

/// Rational roots of a nonzero polynomial over Q.
std::vector<Element> rational_roots(const UniPoly& f);

}  // namespace ordisc
