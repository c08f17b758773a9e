#pragma once

// Multivariate polynomials over Q(i) and the substitution action f(x) -> f(gx).

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reflectinv/exactmath.hpp"

namespace reflectinv {

struct Monomial {
  std::vector<std::uint32_t> exps;

  std::size_t nvars() const noexcept { return exps.size(); }
  std::uint32_t degree() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
};

/// Graded lexicographic order with x > y > ...; `operator()(a, b)` is true
/// when a comes first, so ordered containers iterate leading terms first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Names used for printing and parsing: x, y, z for up to three variables,
/// x1..xn otherwise.
std::string variable_name(std::size_t nvars, std::size_t k);

class Poly {
 public:
  using Terms = std::map<Monomial, Gauss, GrlexDescending>;

  explicit Poly(std::size_t nvars = 2) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Gauss& c);
  static Poly variable(std::size_t nvars, std::size_t k);
  static Poly term(const Gauss& c, Monomial m);
  static Poly parse(std::string_view text, std::size_t nvars = 2);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree, -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Gauss coefficient(const Monomial& m) const;
  /// Coefficient of the graded-lex leading term; zero for the zero polynomial.
  Gauss leading_coefficient() const;

  void add_term(const Monomial& m, const Gauss& c);

  Poly derivative(std::size_t var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Gauss& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Gauss& s) { return a *= s; }
  friend Poly operator*(const Gauss& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. `x^8 + 14*x^4*y^4 + y^8`.
  std::string str() const;

 private:
  void check_vars(const Poly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

Poly pow(const Poly& f, unsigned k);

/// (sum_j coeffs[j] x_j)^k expanded with multinomial coefficients.
Poly linear_form_power(std::span<const Gauss> coeffs, unsigned k);

/// f(g x): each x_i is replaced by sum_j g(i, j) x_j.
Poly act(const QiMatrix& g, const Poly& f);

/// All monomials of total degree d in graded-lex descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Degree-d monomials with position lookup; the coordinate system for
/// degree slices.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monos_.size(); }
  const Monomial& operator[](std::size_t k) const { return monos_[k]; }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  std::size_t index_of(const Monomial& m) const;

  /// Coefficients of a homogeneous degree-d polynomial in this basis.
  QiVector coords(const Poly& f) const;
  Poly poly(std::span<const Gauss> coords) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

/// Matrix of f -> f(gx) on degree-d polynomials; column k holds the
/// coordinates of basis[k](g x).
QiMatrix substitution_matrix(const QiMatrix& g, const MonomialBasis& basis);

/// Vector of polynomials, all homogeneous of one common degree (or zero).
class PolyVec {
 public:
  PolyVec() = default;
  explicit PolyVec(std::vector<Poly> comps);
  static PolyVec zero(std::size_t m, std::size_t nvars);
  static PolyVec parse(std::span<const std::string> comps, std::size_t nvars = 2);

  std::size_t size() const noexcept { return comps_.size(); }
  std::size_t nvars() const noexcept { return comps_.empty() ? 0 : comps_.front().nvars(); }
  const Poly& operator[](std::size_t k) const { return comps_[k]; }
  Poly& operator[](std::size_t k) { return comps_[k]; }
  auto begin() const noexcept { return comps_.begin(); }
  auto end() const noexcept { return comps_.end(); }

  bool is_zero() const noexcept;
  /// Common degree of the nonzero components, -1 when all are zero.
  int degree() const;
  bool is_homogeneous() const;

  PolyVec& operator+=(const PolyVec& o);
  PolyVec& operator-=(const PolyVec& o);
  PolyVec& operator*=(const Gauss& s);
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
  friend PolyVec operator*(PolyVec a, const Gauss& s) { return a *= s; }
  friend PolyVec operator*(const Gauss& s, PolyVec a) { return a *= s; }
  friend PolyVec operator*(const Poly& p, const PolyVec& v);
  friend bool operator==(const PolyVec&, const PolyVec&) = default;

  /// Parenthesized tuple of canonical component texts.
  std::string str() const;

  /// Component-major coordinates in the given degree-d basis.
  QiVector coords(const MonomialBasis& basis) const;
  static PolyVec from_coords(std::span<const Gauss> coords, std::size_t m, const MonomialBasis& basis);

 private:
  std::vector<Poly> comps_;
};

PolyVec act_vec(const QiMatrix& g, const PolyVec& f);
/// rho * F as a matrix-vector product.
PolyVec mat_apply(const QiMatrix& rho, const PolyVec& f);
/// Scales F so its first nonzero coefficient (components in order, terms in
/// graded-lex order within each) is 1.
PolyVec normalize(const PolyVec& f);

}  // namespace reflectinv
