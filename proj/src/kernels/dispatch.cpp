#include "reflectinv/kernels.hpp"

#include <string>

namespace reflectinv::kernels {

Backend default_backend() noexcept { return openmp_enabled() ? Backend::OpenMP : Backend::Serial; }

bool openmp_enabled() noexcept {
#ifdef REFLECTINV_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

const char* backend_name(Backend b) noexcept { return b == Backend::OpenMP ? "openmp" : "serial"; }

namespace detail {

void check_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": length mismatch");
}

void check_kron_shapes(std::span<const QiMatrix> left, std::span<const QiMatrix> right) {
  check_same_length(left.size(), right.size(), "kron_sum");
  for (std::size_t i = 1; i < left.size(); ++i)
    if (left[i].rows() != left[0].rows() || left[i].cols() != left[0].cols() ||
        right[i].rows() != right[0].rows() || right[i].cols() != right[0].cols())
      throw Error(ErrorKind::DimensionMismatch, "kron_sum: inconsistent shapes");
}

void check_images(std::span<const QiMatrix> images, std::size_t m, std::size_t count) {
  check_same_length(images.size(), count, "images");
  for (const auto& im : images)
    if (im.rows() != m || im.cols() != m)
      throw Error(ErrorKind::DimensionMismatch, "image size does not match vector length");
}

}  // namespace detail

TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights, std::size_t order,
                           Backend b) {
  return b == Backend::OpenMP ? openmp::molien_sum(elements, weights, order)
                              : serial::molien_sum(elements, weights, order);
}

QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right, Backend b) {
  return b == Backend::OpenMP ? openmp::kron_sum(left, right) : serial::kron_sum(left, right);
}

std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis,
                                            Backend b) {
  return b == Backend::OpenMP ? openmp::substitution_matrices(elements, basis)
                              : serial::substitution_matrices(elements, basis);
}

std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images, Backend b) {
  return b == Backend::OpenMP ? openmp::homomorphism_defects(g, images) : serial::homomorphism_defects(g, images);
}

std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements, std::span<const QiMatrix> images,
                                              const PolyVec& f, Backend b) {
  return b == Backend::OpenMP ? openmp::equivariance_defects(elements, images, f)
                              : serial::equivariance_defects(elements, images, f);
}

PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images, const PolyVec& f,
                     Backend b) {
  return b == Backend::OpenMP ? openmp::reynolds_sum(elements, inv_images, f)
                              : serial::reynolds_sum(elements, inv_images, f);
}

}  // namespace reflectinv::kernels
