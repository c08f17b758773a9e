#include "reflectinv/kernels.hpp"

namespace reflectinv::kernels::serial {

TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights, std::size_t order) {
  detail::check_same_length(elements.size(), weights.size(), "molien_sum");
  TruncatedSeries acc(order);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (weights[i].is_zero()) continue;
    acc += series_inverse(char_poly_reciprocal(elements[i]), order) * weights[i];
  }
  return acc;
}

QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right) {
  detail::check_kron_shapes(left, right);
  if (left.empty()) return QiMatrix();
  QiMatrix acc(left[0].rows() * right[0].rows(), left[0].cols() * right[0].cols());
  for (std::size_t i = 0; i < left.size(); ++i) kron_add(acc, left[i], right[i]);
  return acc;
}

std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis) {
  std::vector<QiMatrix> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(substitution_matrix(g, basis));
  return out;
}

std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images) {
  detail::check_same_length(images.size(), g.order(), "homomorphism_defects");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (images[i] * images[j] != images[g.product_index(i, j)]) ++bad;
  return bad;
}

std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements, std::span<const QiMatrix> images,
                                              const PolyVec& f) {
  detail::check_images(images, f.size(), elements.size());
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (act_vec(elements[i], f) != mat_apply(images[i], f)) bad.push_back(i);
  return bad;
}

PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images, const PolyVec& f) {
  detail::check_images(inv_images, f.size(), elements.size());
  PolyVec acc = PolyVec::zero(f.size(), f.nvars());
  for (std::size_t i = 0; i < elements.size(); ++i) acc += mat_apply(inv_images[i], act_vec(elements[i], f));
  return acc;
}

}  // namespace reflectinv::kernels::serial
