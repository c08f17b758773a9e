#include "reflectinv/molien.hpp"

#include <algorithm>

namespace reflectinv {

namespace {

void require_nonnegative_integers(const TruncatedSeries& s, const std::string& label) {
  for (std::size_t k = 0; k <= s.order(); ++k) {
    const Gauss& c = s[k];
    if (!c.is_integer() || sgn(c.re()) < 0)
      throw Error(ErrorKind::NonIntegralCoefficient,
                  "coefficient of t^" + std::to_string(k) + " for '" + label + "' is " + c.str());
  }
}

}  // namespace

TruncatedSeries molien_equivariant(const MatrixGroup& g, const Representation& rep, std::size_t order,
                                   kernels::Backend backend) {
  if (!rep.extended() || rep.image_table().size() != g.order())
    throw Error(ErrorKind::InvalidInput, "representation '" + rep.label() + "' is not extended over this group");
  std::vector<Gauss> weights(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) weights[i] = rep.image(g.inverse_of(i)).trace();
  TruncatedSeries s = kernels::molien_sum(g.elements(), weights, order, backend);
  s *= frac(1, static_cast<long>(g.order()));
  require_nonnegative_integers(s, rep.label());
  return s;
}

TruncatedSeries molien_scalar(const MatrixGroup& g, std::size_t order, kernels::Backend backend) {
  std::vector<Gauss> weights(g.order(), Gauss(1));
  TruncatedSeries s = kernels::molien_sum(g.elements(), weights, order, backend);
  s *= frac(1, static_cast<long>(g.order()));
  require_nonnegative_integers(s, "invariants");
  return s;
}

int HilbertData::numerator_degree() const noexcept {
  for (std::size_t k = numerator.size(); k-- > 0;)
    if (sgn(numerator[k]) != 0) return static_cast<int>(k);
  return -1;
}

bool HilbertData::nonnegative() const noexcept {
  return std::all_of(numerator.begin(), numerator.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

Integer HilbertData::numerator_sum() const {
  Integer s = 0;
  for (const auto& c : numerator) s += c;
  return s;
}

TruncatedSeries HilbertData::expand(std::size_t order) const {
  std::vector<Gauss> num;
  for (const auto& c : numerator) num.push_back(Gauss(Rational(c)));
  TruncatedSeries s(num, order);
  for (unsigned d : denominator_degrees) {
    TPoly factor;
    factor.coeffs.assign(d + 1, Gauss());
    factor.coeffs[0] = 1;
    factor.coeffs[d] = -1;
    s = s * series_inverse(factor, order);
  }
  return s;
}

std::string HilbertData::numerator_str() const {
  std::vector<Gauss> c;
  for (const auto& x : numerator) c.push_back(Gauss(Rational(x)));
  return t_terms_text(c);
}

std::string HilbertData::str() const {
  std::string num = numerator_str();
  int terms = static_cast<int>(std::count_if(numerator.begin(), numerator.end(), [](const Integer& x) { return sgn(x) != 0; }));
  if (terms > 1) num = "(" + num + ")";
  if (denominator_degrees.empty()) return num;
  std::string den;
  for (std::size_t k = 0; k < denominator_degrees.size(); ++k) {
    if (k) den += '*';
    den += "(1 - t^" + std::to_string(denominator_degrees[k]) + ")";
  }
  if (denominator_degrees.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

HilbertData numerator_wrt(const TruncatedSeries& s, const std::vector<unsigned>& degrees) {
  if (degrees.empty() || std::any_of(degrees.begin(), degrees.end(), [](unsigned d) { return d == 0; }))
    throw Error(ErrorKind::InvalidInput, "denominator degrees must be positive");
  const std::size_t order = s.order();
  std::vector<Gauss> c = s.coeffs();
  for (unsigned d : degrees)
    for (std::size_t k = order + 1; k-- > d;)
      if (!c[k - d].is_zero()) c[k] -= c[k - d];

  HilbertData hd;
  hd.denominator_degrees = degrees;
  hd.verified_to = order;
  int last = -1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (!c[k].is_integer())
      throw Error(ErrorKind::NonIntegralCoefficient, "numerator coefficient of t^" + std::to_string(k) + " is " + c[k].str());
    if (!c[k].is_zero()) last = static_cast<int>(k);
  }
  const unsigned widest = *std::max_element(degrees.begin(), degrees.end());
  if (last >= 0 && order - static_cast<std::size_t>(last) < widest)
    throw Error(ErrorKind::NonTerminatingNumerator,
                "numerator has a nonzero term at t^" + std::to_string(last) + " within " + std::to_string(widest) +
                    " of the truncation order " + std::to_string(order));
  hd.numerator.reserve(static_cast<std::size_t>(last + 1));
  for (int k = 0; k <= last; ++k) hd.numerator.push_back(c[static_cast<std::size_t>(k)].re().get_num());
  return hd;
}

}  // namespace reflectinv
