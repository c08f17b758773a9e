#pragma once

// Exact arithmetic over Q and Q(i) and dense linear algebra over Q(i).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "reflectinv/error.hpp"

namespace reflectinv {

/// Arbitrary precision rational, always kept canonical by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Element re + im*i of the Gaussian rationals.
class Gauss {
 public:
  Gauss() = default;
  Gauss(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  /// Components are canonicalized, so unreduced mpq values are accepted.
  Gauss(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_integer() const;

  Gauss conj() const { return Gauss(re_, -im_); }
  /// |a|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gauss inverse() const;

  Gauss operator-() const { return Gauss(-re_, -im_); }
  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o) { return *this *= o.inverse(); }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }

  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first) used only for exact keyed lookup.
  friend std::strong_ordering operator<=>(const Gauss& a, const Gauss& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.im_, b.im_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// Entry-text form, e.g. `1/2+1/2i`, `-i`, `14`.
  std::string str() const;
  static Gauss parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gauss& a);

/// The real value num/den.
Gauss frac(long num, long den);

Gauss gauss_parse(std::string_view text);
std::string gauss_print(const Gauss& a);
Gauss gauss_inverse(const Gauss& a);

using QiVector = std::vector<Gauss>;

/// Dense row-major matrix over Q(i).
class QiMatrix {
 public:
  QiMatrix() = default;
  QiMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QiMatrix(std::size_t rows, std::size_t cols, std::vector<Gauss> entries);
  QiMatrix(std::initializer_list<std::initializer_list<Gauss>> rows);

  static QiMatrix identity(std::size_t n);
  static QiMatrix diag(std::span<const Gauss> d);
  static QiMatrix diag(std::initializer_list<Gauss> d) { return diag(std::span<const Gauss>(d.begin(), d.size())); }
  static QiMatrix from_rows(std::span<const QiVector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  Gauss& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Gauss& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<const Gauss> entries() const noexcept { return a_; }
  std::span<Gauss> row(std::size_t r) { return std::span<Gauss>(a_).subspan(r * cols_, cols_); }
  std::span<const Gauss> row(std::size_t r) const { return std::span<const Gauss>(a_).subspan(r * cols_, cols_); }

  Gauss trace() const;
  QiMatrix transpose() const;
  QiVector apply(std::span<const Gauss> v) const;

  QiMatrix& operator+=(const QiMatrix& o);
  QiMatrix& operator-=(const QiMatrix& o);
  QiMatrix& operator*=(const Gauss& s);
  friend QiMatrix operator+(QiMatrix a, const QiMatrix& b) { return a += b; }
  friend QiMatrix operator-(QiMatrix a, const QiMatrix& b) { return a -= b; }
  friend QiMatrix operator*(QiMatrix a, const Gauss& s) { return a *= s; }
  friend QiMatrix operator*(const Gauss& s, QiMatrix a) { return a *= s; }
  friend QiMatrix operator*(const QiMatrix& a, const QiMatrix& b);

  friend bool operator==(const QiMatrix& a, const QiMatrix& b) = default;
  friend std::strong_ordering operator<=>(const QiMatrix& a, const QiMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gauss> a_;
};

std::ostream& operator<<(std::ostream& os, const QiMatrix& m);

QiMatrix mat_mul(const QiMatrix& a, const QiMatrix& b);
Gauss mat_det(const QiMatrix& a);
QiMatrix mat_inverse(const QiMatrix& a);
/// Kronecker product; block (i, j) of the result is a(i, j) * b.
QiMatrix kron(const QiMatrix& a, const QiMatrix& b);
/// acc += kron(a, b) without forming the product.
void kron_add(QiMatrix& acc, const QiMatrix& a, const QiMatrix& b);

struct RrefResult {
  QiMatrix matrix;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form. Pivot search scans rows top-down in the first
/// column that still has a nonzero entry, so the result is deterministic.
RrefResult rref(QiMatrix a);
std::size_t rank(const QiMatrix& a);
/// Right null space, one vector per free column with a 1 in that coordinate.
std::vector<QiVector> kernel_basis(const QiMatrix& a);

/// Nonzero rows of rref(rows); a canonical basis of the row space.
std::vector<QiVector> echelon_basis(std::span<const QiVector> rows, std::size_t cols);

}  // namespace reflectinv
