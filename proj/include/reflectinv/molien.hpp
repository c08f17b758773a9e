#pragma once

// Molien and equivariant Molien series, and closed forms over a product of
// (1 - t^d) factors.

#include <cstddef>
#include <string>
#include <vector>

#include "reflectinv/group.hpp"
#include "reflectinv/kernels.hpp"
#include "reflectinv/rep.hpp"
#include "reflectinv/series.hpp"

namespace reflectinv {

/// (1/|G|) sum_g tr(rho(g^{-1})) / det(I - t g) through t^order. Every
/// coefficient is checked to be a non-negative rational integer.
TruncatedSeries molien_equivariant(const MatrixGroup& g, const Representation& rep, std::size_t order,
                                   kernels::Backend backend = kernels::default_backend());

/// Classical Molien series of the invariant ring.
TruncatedSeries molien_scalar(const MatrixGroup& g, std::size_t order,
                              kernels::Backend backend = kernels::default_backend());

/// numerator(t) / prod_i (1 - t^{d_i}).
struct HilbertData {
  std::vector<Integer> numerator;
  std::vector<unsigned> denominator_degrees;
  std::size_t verified_to = 0;

  int numerator_degree() const noexcept;
  bool nonnegative() const noexcept;
  Integer numerator_sum() const;
  /// Re-expansion of the closed form through t^order.
  TruncatedSeries expand(std::size_t order) const;
  std::string numerator_str() const;
  /// e.g. `(t^4 + t^8)/((1 - t^8)*(1 - t^12))`.
  std::string str() const;
};

/// Multiplies s by prod (1 - t^{d_i}) and checks that the product terminates:
/// the zero tail after its last nonzero term must span at least max(d_i)
/// coefficients before the truncation order.
HilbertData numerator_wrt(const TruncatedSeries& s, const std::vector<unsigned>& degrees);

}  // namespace reflectinv
