#pragma once

// Matrix representations given by generator images, extended to the whole
// group along the stored generator words.

#include <cstddef>
#include <string>
#include <vector>

#include "reflectinv/exactmath.hpp"
#include "reflectinv/group.hpp"

namespace reflectinv {

class Representation {
 public:
  Representation() = default;
  /// Validates that all images are square, of one size, and invertible.
  Representation(std::string label, std::vector<QiMatrix> gen_images);

  const std::string& label() const noexcept { return label_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<QiMatrix>& gen_images() const noexcept { return gen_images_; }

  bool extended() const noexcept { return !image_table_.empty(); }
  const std::vector<QiMatrix>& image_table() const noexcept { return image_table_; }
  /// rho(element i); requires extended().
  const QiMatrix& image(std::size_t i) const;

  friend Representation rep_extend(const Representation& rep, const MatrixGroup& g);

 private:
  std::string label_;
  std::size_t degree_ = 0;
  std::vector<QiMatrix> gen_images_;
  std::vector<QiMatrix> image_table_;
};

/// Groups up to this order get the full pairwise homomorphism check; larger
/// ones are checked on products with each generator, which already implies it.
inline constexpr std::size_t kFullHomomorphismCheckLimit = 4096;

Representation rep_extend(const Representation& rep, const MatrixGroup& g);

/// Trivial representation of degree 1 on `generator_count` generators.
Representation trivial_rep(std::size_t generator_count, std::string label = "rho1");
/// The identity map g -> g of a matrix group.
Representation natural_rep(const MatrixGroup& g, std::string label = "natural");

struct Character {
  std::vector<Gauss> values;

  friend bool operator==(const Character&, const Character&) = default;
};

Character character(const Representation& rep);

Representation tensor(const Representation& a, const Representation& b);

/// (1/|G|) sum_i a(g_i) b(g_i^{-1}).
Gauss char_inner(const Character& a, const Character& b, const MatrixGroup& g);

bool is_irreducible(const Representation& rep, const MatrixGroup& g);

/// Closure of the generator images, i.e. the image group rho(G).
MatrixGroup image_group(const Representation& rep, std::size_t cap = kDefaultGroupCap);

}  // namespace reflectinv
