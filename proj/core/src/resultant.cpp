#include "ordisc/resultant.hpp"

namespace ordisc {

MultiPoly discriminant_y(const MonicInY& f) {
  const auto c = f.y_coeffs();
  return discriminant_y<MultiPoly>(std::span<const MultiPoly>(c));
}

Element discriminant_y(const UniPoly& f) {
  if (!f.is_monic()) throw NotMonic(f.to_string());
  return discriminant_y<Element>(std::span<const Element>(f.coeffs()));
}

TruncatedSeries discriminant_y(std::span<const TruncatedSeries> monic_coeffs) {
  return discriminant_y<TruncatedSeries>(monic_coeffs);
}

MultiPoly resultant_y(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() == 0 || f.nvars() != g.nvars()) throw SpecMismatch("resultant operands");
  const std::size_t y = f.nvars() - 1;
  const auto cf = f.coefficients_in(y);
  const auto cg = g.coefficients_in(y);
  return resultant_y<MultiPoly>(cf, cg, cf.size() - 1, cg.size() - 1, cf.front());
}

}  // namespace ordisc
