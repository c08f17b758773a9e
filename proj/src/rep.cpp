#include "reflectinv/rep.hpp"

#include "reflectinv/kernels.hpp"

namespace reflectinv {

Representation::Representation(std::string label, std::vector<QiMatrix> gen_images)
    : label_(std::move(label)), gen_images_(std::move(gen_images)) {
  if (gen_images_.empty()) throw Error(ErrorKind::InvalidInput, "representation '" + label_ + "' has no images");
  degree_ = gen_images_.front().rows();
  for (const auto& m : gen_images_) {
    if (!m.is_square() || m.rows() != degree_)
      throw Error(ErrorKind::DimensionMismatch, "images of '" + label_ + "' must be square of one size");
    if (mat_det(m).is_zero()) throw Error(ErrorKind::SingularGenerator, "image of '" + label_ + "' is singular");
  }
}

const QiMatrix& Representation::image(std::size_t i) const {
  if (!extended()) throw Error(ErrorKind::InvalidInput, "representation '" + label_ + "' is not extended");
  return image_table_.at(i);
}

Representation rep_extend(const Representation& rep, const MatrixGroup& g) {
  if (rep.gen_images_.size() != g.generators().size())
    throw Error(ErrorKind::GeneratorCountMismatch, "representation '" + rep.label_ + "' has " +
                                                       std::to_string(rep.gen_images_.size()) + " images for " +
                                                       std::to_string(g.generators().size()) + " generators");
  Representation out = rep;
  out.image_table_.clear();
  out.image_table_.reserve(g.order());
  out.image_table_.push_back(QiMatrix::identity(rep.degree_));
  // BFS order guarantees the word prefix of element i is an earlier element.
  for (std::size_t i = 1; i < g.order(); ++i) {
    const auto& w = g.word(i);
    std::vector<std::size_t> prefix(w.begin(), w.end() - 1);
    std::size_t parent = 0;
    for (std::size_t gen : prefix) parent = g.right_multiple(parent, gen);
    out.image_table_.push_back(out.image_table_[parent] * rep.gen_images_[w.back()]);
  }

  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.generators().size(); ++j)
      if (out.image_table_[i] * rep.gen_images_[j] != out.image_table_[g.right_multiple(i, j)])
        throw Error(ErrorKind::NotAHomomorphism,
                    "'" + rep.label_ + "' violates a relation at element " + std::to_string(i));
  if (g.order() <= kFullHomomorphismCheckLimit) {
    std::size_t bad = kernels::homomorphism_defects(g, out.image_table_);
    if (bad) throw Error(ErrorKind::NotAHomomorphism, "'" + rep.label_ + "' fails " + std::to_string(bad) + " product checks");
  }
  return out;
}

Representation trivial_rep(std::size_t generator_count, std::string label) {
  return Representation(std::move(label), std::vector<QiMatrix>(generator_count, QiMatrix::identity(1)));
}

Representation natural_rep(const MatrixGroup& g, std::string label) {
  return Representation(std::move(label), g.generators());
}

Character character(const Representation& rep) {
  if (!rep.extended()) throw Error(ErrorKind::InvalidInput, "character of an unextended representation");
  Character chi;
  chi.values.reserve(rep.image_table().size());
  for (const auto& m : rep.image_table()) chi.values.push_back(m.trace());
  return chi;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.gen_images().size() != b.gen_images().size())
    throw Error(ErrorKind::GeneratorCountMismatch, "tensor factors have different generator counts");
  std::vector<QiMatrix> images;
  images.reserve(a.gen_images().size());
  for (std::size_t j = 0; j < a.gen_images().size(); ++j) images.push_back(kron(a.gen_images()[j], b.gen_images()[j]));
  return Representation(a.label() + "*" + b.label(), std::move(images));
}

Gauss char_inner(const Character& a, const Character& b, const MatrixGroup& g) {
  if (a.values.size() != g.order() || b.values.size() != g.order())
    throw Error(ErrorKind::DimensionMismatch, "character length does not match group order");
  Gauss sum;
  for (std::size_t i = 0; i < g.order(); ++i) sum += a.values[i] * b.values[g.inverse_of(i)];
  return sum * frac(1, static_cast<long>(g.order()));
}

bool is_irreducible(const Representation& rep, const MatrixGroup& g) {
  Character chi = character(rep);
  return char_inner(chi, chi, g).is_one();
}

MatrixGroup image_group(const Representation& rep, std::size_t cap) { return close(rep.gen_images(), cap); }

}  // namespace reflectinv
