#include "reflectinv/series.hpp"

#include <algorithm>

namespace reflectinv {

int TPoly::degree() const noexcept {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (!coeffs[k].is_zero()) return static_cast<int>(k);
  return -1;
}

bool operator==(const TPoly& a, const TPoly& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = 0; k < n; ++k) {
    Gauss x = k < a.coeffs.size() ? a.coeffs[k] : Gauss();
    Gauss y = k < b.coeffs.size() ? b.coeffs[k] : Gauss();
    if (x != y) return false;
  }
  return true;
}

std::string t_terms_text(const std::vector<Gauss>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Gauss& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    bool negative = false;
    std::string coef;
    if (c.is_real() || sgn(c.re()) == 0) {
      Gauss mag = c;
      if ((c.is_real() && sgn(c.re()) < 0) || (!c.is_real() && sgn(c.im()) < 0)) {
        negative = true;
        mag = -c;
      }
      coef = (mag.is_one() && k > 0) ? "" : mag.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !power.empty()) out += '*';
    out += power;
  }
  return out.empty() ? "0" : out;
}

std::string TPoly::str() const { return t_terms_text(coeffs); }

TruncatedSeries::TruncatedSeries(std::vector<Gauss> coeffs, std::size_t order) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw Error(ErrorKind::DimensionMismatch, "series orders differ");
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Gauss& s) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

std::string TruncatedSeries::str() const { return t_terms_text(c_); }

TruncatedSeries series_inverse(const TPoly& p, std::size_t order) {
  if (p.coeffs.empty() || p.coeffs[0].is_zero())
    throw Error(ErrorKind::NonUnitConstantTerm, "series has zero constant term");
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < p.coeffs.size() && j <= order; ++j)
    if (!p.coeffs[j].is_zero()) support.push_back(j);
  const Gauss inv0 = p.coeffs[0].inverse();
  TruncatedSeries r(order);
  r[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    Gauss acc;
    for (std::size_t j : support) {
      if (j > k) break;
      if (!r[k - j].is_zero()) acc += p.coeffs[j] * r[k - j];
    }
    if (!acc.is_zero()) r[k] = -(acc * inv0);
  }
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& p) {
  return series_inverse(TPoly{p.coeffs()}, p.order());
}

TPoly char_poly_reciprocal(const QiMatrix& g) {
  if (!g.is_square()) throw Error(ErrorKind::NotSquare, "det(I - t g)");
  // Faddeev-LeVerrier: det(lambda I - g) = sum c_k lambda^k, and
  // det(I - t g) = sum_k c_{n-k} t^k.
  const std::size_t n = g.rows();
  std::vector<Gauss> c(n + 1);
  c[n] = 1;
  QiMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QiMatrix next = g * m;
    for (std::size_t d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -((g * m).trace() * frac(1, static_cast<long>(k)));
  }
  TPoly out;
  out.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.coeffs[k] = c[n - k];
  return out;
}

}  // namespace reflectinv
