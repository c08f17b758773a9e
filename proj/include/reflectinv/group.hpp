#pragma once

// Finite matrix groups generated by breadth-first closure.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "reflectinv/exactmath.hpp"

namespace reflectinv {

inline constexpr std::size_t kDefaultGroupCap = 200000;

/// A finite group of invertible matrices. Element 0 is the identity; every
/// element stores a shortest generator word whose left-to-right product is
/// that element.
class MatrixGroup {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<QiMatrix>& generators() const noexcept { return generators_; }
  const std::vector<QiMatrix>& elements() const noexcept { return elements_; }
  const QiMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<std::size_t>& word(std::size_t i) const { return words_.at(i); }
  std::size_t inverse_of(std::size_t i) const { return inverse_of_.at(i); }
  std::optional<std::size_t> find(const QiMatrix& m) const;
  /// Index of element(i) * element(j).
  std::size_t product_index(std::size_t i, std::size_t j) const;
  /// Index of element(i) * generators()[gen].
  std::size_t right_multiple(std::size_t i, std::size_t gen) const { return right_mult_.at(i).at(gen); }

  friend MatrixGroup close(std::span<const QiMatrix> generators, std::size_t cap);

 private:
  std::size_t dim_ = 0;
  std::vector<QiMatrix> generators_;
  std::vector<QiMatrix> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::map<QiMatrix, std::size_t> index_;
  std::vector<std::size_t> inverse_of_;
  std::vector<std::vector<std::size_t>> right_mult_;
};

MatrixGroup close(std::span<const QiMatrix> generators, std::size_t cap = kDefaultGroupCap);

/// Least k >= 1 with element(i)^k = identity.
std::size_t element_order(const MatrixGroup& g, std::size_t i);

}  // namespace reflectinv
