#include "reflectinv/kernels.hpp"

#ifdef REFLECTINV_HAVE_OPENMP
#include <omp.h>
#endif

// Reductions accumulate into one private partial per thread and merge the
// partials under a critical section. Exact arithmetic makes the merge order
// irrelevant to the result.

namespace reflectinv::kernels::openmp {

namespace {

long as_loop_bound(std::size_t n) { return static_cast<long>(n); }

}  // namespace

TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights, std::size_t order) {
  detail::check_same_length(elements.size(), weights.size(), "molien_sum");
  for (const auto& g : elements)
    if (!g.is_square()) throw Error(ErrorKind::NotSquare, "molien_sum");
  TruncatedSeries total(order);
  const long n = as_loop_bound(elements.size());
#pragma omp parallel
  {
    TruncatedSeries part(order);
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < n; ++i) {
      if (weights[i].is_zero()) continue;
      part += series_inverse(char_poly_reciprocal(elements[i]), order) * weights[i];
    }
#pragma omp critical(reflectinv_molien_sum)
    total += part;
  }
  return total;
}

QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right) {
  detail::check_kron_shapes(left, right);
  if (left.empty()) return QiMatrix();
  const std::size_t rows = left[0].rows() * right[0].rows();
  const std::size_t cols = left[0].cols() * right[0].cols();
  QiMatrix total(rows, cols);
  const long n = as_loop_bound(left.size());
#pragma omp parallel
  {
    QiMatrix part(rows, cols);
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < n; ++i) kron_add(part, left[i], right[i]);
#pragma omp critical(reflectinv_kron_sum)
    total += part;
  }
  return total;
}

std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis) {
  for (const auto& g : elements)
    if (!g.is_square() || g.rows() != basis.nvars())
      throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  std::vector<QiMatrix> out(elements.size());
  const long n = as_loop_bound(elements.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[i] = substitution_matrix(elements[i], basis);
  return out;
}

std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images) {
  detail::check_same_length(images.size(), g.order(), "homomorphism_defects");
  for (const auto& im : images)
    if (im.rows() != images[0].rows() || im.cols() != images[0].cols())
      throw Error(ErrorKind::DimensionMismatch, "homomorphism_defects: inconsistent image sizes");
  const long n = as_loop_bound(g.order());
  long bad = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : bad)
  for (long i = 0; i < n; ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (images[i] * images[j] != images[g.product_index(static_cast<std::size_t>(i), j)]) ++bad;
  return static_cast<std::size_t>(bad);
}

std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements, std::span<const QiMatrix> images,
                                              const PolyVec& f) {
  detail::check_images(images, f.size(), elements.size());
  for (const auto& g : elements)
    if (!g.is_square() || g.rows() != f.nvars())
      throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  std::vector<char> flag(elements.size(), 0);
  const long n = as_loop_bound(elements.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) flag[i] = act_vec(elements[i], f) != mat_apply(images[i], f);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i]) bad.push_back(i);
  return bad;
}

PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images, const PolyVec& f) {
  detail::check_images(inv_images, f.size(), elements.size());
  for (const auto& g : elements)
    if (!g.is_square() || g.rows() != f.nvars())
      throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  PolyVec total = PolyVec::zero(f.size(), f.nvars());
  const long n = as_loop_bound(elements.size());
#pragma omp parallel
  {
    PolyVec part = PolyVec::zero(f.size(), f.nvars());
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < n; ++i) part += mat_apply(inv_images[i], act_vec(elements[i], f));
#pragma omp critical(reflectinv_reynolds_sum)
    total += part;
  }
  return total;
}

}  // namespace reflectinv::kernels::openmp
