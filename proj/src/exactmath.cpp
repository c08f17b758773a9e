#include "reflectinv/exactmath.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace reflectinv {

const char* kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::GeneratorCountMismatch: return "GeneratorCountMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::NonTerminatingNumerator: return "NonTerminatingNumerator";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::NoSuchDegrees: return "NoSuchDegrees";
    case ErrorKind::NotOneDimensional: return "NotOneDimensional";
    case ErrorKind::FreenessViolation: return "FreenessViolation";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorKind::UnknownRepresentation: return "UnknownRepresentation";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Gauss

bool Gauss::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

Gauss Gauss::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_real()) return Gauss(1 / re_);
  Rational n = norm();
  return Gauss(re_ / n, -im_ / n);
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

class EntryParser {
 public:
  explicit EntryParser(std::string_view s) : s_(s) {}

  Gauss parse() {
    if (s_.empty()) fail("empty entry");
    bool neg = take_sign();
    if (peek() == 'i') {
      ++pos_;
      finish();
      return Gauss(Rational(0), neg ? Rational(-1) : Rational(1));
    }
    Rational first = take_rational();
    if (neg) first = -first;
    if (at_end()) return Gauss(first);
    if (peek() == 'i') {
      ++pos_;
      finish();
      return Gauss(Rational(0), first);
    }
    if (peek() != '+' && peek() != '-') fail("expected sign before imaginary part");
    bool neg_im = take_sign();
    Rational im(1);
    if (peek() != 'i') im = take_rational();
    if (peek() != 'i') fail("expected 'i'");
    ++pos_;
    finish();
    return Gauss(first, neg_im ? Rational(-im) : im);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " in '" + std::string(s_) + "'");
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void finish() const {
    if (!at_end()) fail("trailing characters");
  }
  bool take_sign() {
    if (peek() == '+') { ++pos_; return false; }
    if (peek() == '-') { ++pos_; return true; }
    return false;
  }
  std::string take_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  Rational take_rational() {
    Integer num(take_digits());
    Integer den(1);
    if (peek() == '/') {
      ++pos_;
      den = Integer(take_digits());
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Gauss::str() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  Rational mag = abs(im_);
  if (mag != 1) imag = rational_text(mag);
  imag += 'i';
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Gauss Gauss::parse(std::string_view text) { return EntryParser(trim(text)).parse(); }

std::ostream& operator<<(std::ostream& os, const Gauss& a) { return os << a.str(); }

Gauss frac(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Gauss(q);
}

Gauss gauss_parse(std::string_view text) { return Gauss::parse(text); }
std::string gauss_print(const Gauss& a) { return a.str(); }
Gauss gauss_inverse(const Gauss& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// QiMatrix

QiMatrix::QiMatrix(std::size_t rows, std::size_t cols, std::vector<Gauss> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
}

QiMatrix::QiMatrix(std::initializer_list<std::initializer_list<Gauss>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

QiMatrix QiMatrix::identity(std::size_t n) {
  QiMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

QiMatrix QiMatrix::diag(std::span<const Gauss> d) {
  QiMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

QiMatrix QiMatrix::from_rows(std::span<const QiVector> rows, std::size_t cols) {
  QiMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool QiMatrix::is_zero() const noexcept {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool QiMatrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Gauss& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Gauss QiMatrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::NotSquare, "trace");
  Gauss t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

QiMatrix QiMatrix::transpose() const {
  QiMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QiVector QiMatrix::apply(std::span<const Gauss> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  QiVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Gauss& x = (*this)(r, c);
      if (!x.is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

QiMatrix& QiMatrix::operator+=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

QiMatrix& QiMatrix::operator-=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

QiMatrix& QiMatrix::operator*=(const Gauss& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

QiMatrix operator*(const QiMatrix& a, const QiMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  QiMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Gauss& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Gauss& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

std::strong_ordering operator<=>(const QiMatrix& a, const QiMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (auto c = a.a_[k] <=> b.a_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string QiMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QiMatrix& m) { return os << m.str(); }

QiMatrix mat_mul(const QiMatrix& a, const QiMatrix& b) { return a * b; }

Gauss mat_det(const QiMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant");
  QiMatrix m = a;
  const std::size_t n = m.rows();
  Gauss det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Gauss();
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Gauss inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Gauss f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).is_zero()) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

QiMatrix mat_inverse(const QiMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "inverse");
  const std::size_t n = a.rows();
  QiMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(std::move(aug));
  if (red.rank() < n || red.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  QiMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

QiMatrix kron(const QiMatrix& a, const QiMatrix& b) {
  QiMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Gauss& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const Gauss& y = b(p, q);
          if (!y.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
    }
  return k;
}

void kron_add(QiMatrix& acc, const QiMatrix& a, const QiMatrix& b) {
  if (acc.rows() != a.rows() * b.rows() || acc.cols() != a.cols() * b.cols())
    throw Error(ErrorKind::DimensionMismatch, "kron_add: accumulator shape");
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t p = 0; p < b.rows(); ++p)
    for (std::size_t q = 0; q < b.cols(); ++q)
      if (!b(p, q).is_zero()) support.emplace_back(p, q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Gauss& x = a(i, j);
      if (x.is_zero()) continue;
      for (auto [p, q] : support) acc(i * b.rows() + p, j * b.cols() + q) += x * b(p, q);
    }
}

RrefResult rref(QiMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(r, k));
    {
      Gauss inv = m(r, c).inverse();
      for (std::size_t k = c; k < cols; ++k)
        if (!m(r, k).is_zero()) m(r, k) *= inv;
    }
    support.clear();
    for (std::size_t k = c; k < cols; ++k)
      if (!m(r, k).is_zero()) support.push_back(k);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m(q, c).is_zero()) continue;
      Gauss f = m(q, c);
      for (std::size_t k : support) m(q, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const QiMatrix& a) { return rref(a).rank(); }

std::vector<QiVector> kernel_basis(const QiMatrix& a) {
  RrefResult red = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<QiVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QiVector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
      const Gauss& x = red.matrix(k, f);
      if (!x.is_zero()) v[red.pivots[k]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QiVector> echelon_basis(std::span<const QiVector> rows, std::size_t cols) {
  RrefResult red = rref(QiMatrix::from_rows(rows, cols));
  std::vector<QiVector> out;
  out.reserve(red.rank());
  for (std::size_t r = 0; r < red.rank(); ++r) {
    auto row = red.matrix.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace reflectinv
