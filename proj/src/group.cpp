#include "reflectinv/group.hpp"

#include <deque>
#include <string>

namespace reflectinv {

std::optional<std::size_t> MatrixGroup::find(const QiMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::product_index(std::size_t i, std::size_t j) const {
  // Walk the word of j through the right-multiplication table.
  std::size_t k = i;
  for (std::size_t gen : words_.at(j)) k = right_mult_[k][gen];
  return k;
}

MatrixGroup close(std::span<const QiMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::size_t n = generators.front().rows();
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const QiMatrix& g = generators[j];
    if (!g.is_square() || g.rows() != n)
      throw Error(ErrorKind::DimensionMismatch, "generators must be square of equal size");
    if (mat_det(g).is_zero())
      throw Error(ErrorKind::SingularGenerator, "generator " + std::to_string(j) + " is singular");
  }

  MatrixGroup grp;
  grp.dim_ = n;
  grp.generators_.assign(generators.begin(), generators.end());
  grp.elements_.push_back(QiMatrix::identity(n));
  grp.words_.emplace_back();
  grp.index_.emplace(grp.elements_.front(), 0);
  grp.right_mult_.emplace_back(generators.size());

  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      QiMatrix next = grp.elements_[head] * generators[j];
      auto [it, inserted] = grp.index_.try_emplace(std::move(next), grp.elements_.size());
      if (inserted) {
        if (grp.elements_.size() >= cap)
          throw Error(ErrorKind::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
        grp.elements_.push_back(it->first);
        auto w = grp.words_[head];
        w.push_back(j);
        grp.words_.push_back(std::move(w));
        grp.right_mult_.emplace_back(generators.size());
      }
      grp.right_mult_[head][j] = it->second;
    }
  }

  grp.inverse_of_.assign(grp.order(), 0);
  std::vector<bool> done(grp.order(), false);
  for (std::size_t i = 0; i < grp.order(); ++i) {
    if (done[i]) continue;
    auto inv = grp.find(mat_inverse(grp.elements_[i]));
    if (!inv) throw Error(ErrorKind::Internal, "inverse missing from closure");
    grp.inverse_of_[i] = *inv;
    grp.inverse_of_[*inv] = i;
    done[i] = done[*inv] = true;
  }
  return grp;
}

std::size_t element_order(const MatrixGroup& g, std::size_t i) {
  std::size_t k = 1;
  std::size_t cur = i;
  while (cur != 0) {
    cur = g.product_index(cur, i);
    ++k;
  }
  return k;
}

}  // namespace reflectinv
