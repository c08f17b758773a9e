#pragma once

// Whole-group reductions. Each kernel has a serial reference implementation
// and an OpenMP implementation; both return identical values because every
// sum is exact and therefore independent of evaluation order.

#include <cstddef>
#include <span>
#include <vector>

#include "reflectinv/exactmath.hpp"
#include "reflectinv/group.hpp"
#include "reflectinv/poly.hpp"
#include "reflectinv/series.hpp"

namespace reflectinv::kernels {

enum class Backend { Serial, OpenMP };

/// OpenMP when the library was built with it, Serial otherwise.
Backend default_backend() noexcept;
bool openmp_enabled() noexcept;
const char* backend_name(Backend b) noexcept;

/// sum_i weights[i] / det(I - t elements[i]) through t^order.
TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights,
                           std::size_t order, Backend b = default_backend());

/// sum_i kron(left[i], right[i]).
QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right,
                  Backend b = default_backend());

/// substitution_matrix(elements[i], basis) for every i.
std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis,
                                            Backend b = default_backend());

/// Number of pairs (i, j) with images[i] * images[j] != images[index of g_i g_j].
std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images,
                                 Backend b = default_backend());

/// Sorted indices i with F(g_i x) != images[i] F(x).
std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements,
                                              std::span<const QiMatrix> images, const PolyVec& f,
                                              Backend b = default_backend());

/// sum_i inv_images[i] F(g_i x), the unnormalized Reynolds sum.
PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images,
                     const PolyVec& f, Backend b = default_backend());

namespace serial {
TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights, std::size_t order);
QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right);
std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis);
std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images);
std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements, std::span<const QiMatrix> images,
                                              const PolyVec& f);
PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images, const PolyVec& f);
}  // namespace serial

namespace openmp {
TruncatedSeries molien_sum(std::span<const QiMatrix> elements, std::span<const Gauss> weights, std::size_t order);
QiMatrix kron_sum(std::span<const QiMatrix> left, std::span<const QiMatrix> right);
std::vector<QiMatrix> substitution_matrices(std::span<const QiMatrix> elements, const MonomialBasis& basis);
std::size_t homomorphism_defects(const MatrixGroup& g, std::span<const QiMatrix> images);
std::vector<std::size_t> equivariance_defects(std::span<const QiMatrix> elements, std::span<const QiMatrix> images,
                                              const PolyVec& f);
PolyVec reynolds_sum(std::span<const QiMatrix> elements, std::span<const QiMatrix> inv_images, const PolyVec& f);
}  // namespace openmp

/// Argument validation shared by both backends; throws before any parallel
/// region is entered.
namespace detail {
void check_same_length(std::size_t a, std::size_t b, const char* what);
void check_kron_shapes(std::span<const QiMatrix> left, std::span<const QiMatrix> right);
void check_images(std::span<const QiMatrix> images, std::size_t m, std::size_t count);
}  // namespace detail

}  // namespace reflectinv::kernels
