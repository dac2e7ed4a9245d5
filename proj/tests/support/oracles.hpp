#pragma once

// Independent reference computations used only by tests. None of these
// share code paths with the library routines they check.

#include <vector>

#include "ordisc/multipoly.hpp"

namespace ordisc::testkit {

/// Determinant by the permutation expansion.
template <class R>
R leibniz_determinant(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  R total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term = one;
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// prod_{i<j} (b_i - b_j)^2 over a multiset of roots.
Element discriminant_from_roots(const std::vector<Element>& roots);

/// prod (Y - b_i) as a univariate polynomial.
UniPoly poly_from_roots(const Field& field, const std::vector<Element>& roots);

/// Whether the plane curve F(X1, Y) = 0 over Q has a point where F and both
/// partial derivatives vanish. Eliminates Y by resultants, then decides the
/// common Y-root question over Q[x]/(g) splitting g at zero divisors.
bool curve_has_singular_point(const MonicInY& f);

/// ord at the origin as the lowest total degree among terms, computed
/// from an explicit expansion of f(P + X) through binomials.
Order order_by_binomials(const MultiPoly& f, const std::vector<Element>& point);

}  // namespace ordisc::testkit
