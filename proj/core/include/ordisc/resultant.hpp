#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordisc/errors.hpp"
#include "ordisc/multipoly.hpp"

namespace ordisc {

/// Values carry their own ring context, so zero()/one() are taken from an
/// existing element rather than from the type.
template <class R>
concept CommutativeRing = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
};

template <class R>
concept ExactDivisionRing = CommutativeRing<R> && requires(const R& a, const R& b) {
  { a.divide_exact(b) } -> std::convertible_to<R>;
};

/// Largest matrix handled by division-free cofactor expansion.
inline constexpr std::size_t kMaxCofactorSize = 12;

template <CommutativeRing R>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t n, const R& prototype)
      : n_(n), zero_(prototype.zero()), e_(n * n, zero_) {}

  std::size_t size() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const R& prototype() const { return zero_; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t n_;
  R zero_;
  std::vector<R> e_;
};

/// Fraction-free Gaussian elimination; every division is exact.
template <ExactDivisionRing R>
R bareiss_determinant(SquareMatrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return m.prototype().one();
  bool negate = false;
  R prev = m.prototype().one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return m.prototype();
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(v) : v.divide_exact(prev);
      }
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Laplace expansion along rows with minors memoized by column set.
template <CommutativeRing R>
R cofactor_determinant(const SquareMatrix<R>& m) {
  const std::size_t n = m.size();
  if (n > kMaxCofactorSize) throw SizeUnsupported(n);
  if (n == 0) return m.prototype().one();
  std::vector<std::optional<R>> memo(std::size_t{1} << n);
  auto minor = [&](auto&& self, std::uint32_t cols) -> R {
    if (cols == 0) return m.prototype().one();
    if (memo[cols]) return *memo[cols];
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
    R acc = m.prototype();
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!m(row, j).is_zero()) {
        R term = m(row, j) * self(self, cols & ~(1u << j));
        acc = pos % 2 == 0 ? acc + term : acc - term;
      }
      ++pos;
    }
    memo[cols] = acc;
    return acc;
  };
  return minor(minor, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

/// Bareiss when the ring has exact division, else cofactor expansion
/// (SizeUnsupported above kMaxCofactorSize).
template <CommutativeRing R>
R determinant(const SquareMatrix<R>& m) {
  if constexpr (ExactDivisionRing<R>)
    return bareiss_determinant(m);
  else
    return cofactor_determinant(m);
}

/// Sylvester matrix of f, g with formal degrees deg_f, deg_g; coefficient
/// lists run from low to high degree and may be shorter than formal degree.
/// The first deg_g rows hold shifted copies of f, the next deg_f rows g.
template <CommutativeRing R>
SquareMatrix<R> sylvester_matrix(std::span<const R> f, std::size_t deg_f, std::span<const R> g,
                                 std::size_t deg_g, const R& prototype) {
  auto check = [](std::span<const R> c, std::size_t deg) {
    for (std::size_t i = deg + 1; i < c.size(); ++i)
      if (!c[i].is_zero()) throw FormalDegreeTooSmall();
  };
  check(f, deg_f);
  check(g, deg_g);
  const std::size_t n = deg_f + deg_g;
  SquareMatrix<R> s(n, prototype);
  for (std::size_t row = 0; row < deg_g; ++row)
    for (std::size_t k = 0; k <= deg_f && k < f.size(); ++k) s(row, row + deg_f - k) = f[k];
  for (std::size_t row = 0; row < deg_f; ++row)
    for (std::size_t k = 0; k <= deg_g && k < g.size(); ++k)
      s(deg_g + row, row + deg_g - k) = g[k];
  return s;
}

/// Res(f, g) as the Sylvester determinant with the given formal degrees.
/// With this layout Res(f, g) = lc(f)^deg_g * prod g(roots of f), and
/// Res(f, g) = (-1)^(deg_f*deg_g) Res(g, f).
template <CommutativeRing R>
R resultant_y(std::span<const R> f, std::span<const R> g, std::size_t deg_f, std::size_t deg_g,
              const R& prototype) {
  return determinant(sylvester_matrix(f, deg_f, g, deg_g, prototype));
}

/// (-1)^(d(d-1)/2) Res(F, dF/dY) for monic F given by coefficients of
/// Y^0..Y^d. The derivative keeps formal degree d-1 even when the
/// characteristic kills its leading coefficient. d == 1 gives 1.
template <CommutativeRing R>
R discriminant_y(std::span<const R> monic_coeffs) {
  if (monic_coeffs.size() < 2) throw InputError("discriminant needs Y-degree >= 1");
  const std::size_t d = monic_coeffs.size() - 1;
  const R& proto = monic_coeffs[0];
  if (d == 1) return proto.one();
  std::vector<R> deriv;
  deriv.reserve(d);
  for (std::size_t k = 1; k <= d; ++k) {
    R acc = proto.zero();
    for (std::size_t i = 0; i < k; ++i) acc = acc + monic_coeffs[k];
    deriv.push_back(std::move(acc));
  }
  R res = resultant_y<R>(monic_coeffs, deriv, d, d - 1, proto);
  return ((d * (d - 1) / 2) % 2 == 0) ? res : -res;
}

/// D(X) = disc_Y F over K[X] (exact, Bareiss).
MultiPoly discriminant_y(const MonicInY& f);
/// Discriminant of a monic univariate polynomial.
Element discriminant_y(const UniPoly& f);
/// Discriminant of a monic polynomial in Y with series coefficients
/// (cofactor expansion, no division).
TruncatedSeries discriminant_y(std::span<const TruncatedSeries> monic_coeffs);

/// Y-resultant of two polynomials whose last variable is Y, with formal
/// degrees taken from their actual Y-degrees.
MultiPoly resultant_y(const MultiPoly& f, const MultiPoly& g);

}  // namespace ordisc
