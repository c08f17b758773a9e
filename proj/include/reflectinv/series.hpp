#pragma once

// Polynomials and truncated power series in a single variable t.

#include <cstddef>
#include <string>
#include <vector>

#include "reflectinv/exactmath.hpp"

namespace reflectinv {

/// Polynomial in t; coeffs[k] is the coefficient of t^k.
struct TPoly {
  std::vector<Gauss> coeffs;

  /// -1 for the zero polynomial.
  int degree() const noexcept;
  friend bool operator==(const TPoly& a, const TPoly& b);
  std::string str() const;
};

/// Power series known exactly through t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
  TruncatedSeries(std::vector<Gauss> coeffs, std::size_t order);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Gauss& operator[](std::size_t k) const { return c_.at(k); }
  Gauss& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Gauss>& coeffs() const noexcept { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Gauss& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Gauss& s) { return a *= s; }
  /// Product truncated at the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Nonzero terms through t^order, e.g. `1 + t^8 + t^12 + t^16`.
  std::string str() const;

 private:
  std::vector<Gauss> c_;
};

/// 1/p through t^order.
TruncatedSeries series_inverse(const TruncatedSeries& p);
TruncatedSeries series_inverse(const TPoly& p, std::size_t order);

/// det(I - t g).
TPoly char_poly_reciprocal(const QiMatrix& g);

/// Text for sum_k c_k t^k over the nonzero c_k.
std::string t_terms_text(const std::vector<Gauss>& coeffs);

}  // namespace reflectinv
