#include "reflectinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace reflectinv {

std::uint32_t Monomial::degree() const noexcept {
  return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] += b.exps[k];
  return m;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  std::uint32_t da = a.degree();
  std::uint32_t db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

std::string variable_name(std::size_t nvars, std::size_t k) {
  static const char* small[] = {"x", "y", "z"};
  if (nvars <= 3) return small[k];
  return "x" + std::to_string(k + 1);
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(std::size_t nvars, const Gauss& c) {
  Poly p(nvars);
  p.add_term(Monomial{std::vector<std::uint32_t>(nvars, 0)}, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k) {
  Monomial m{std::vector<std::uint32_t>(nvars, 0)};
  m.exps.at(k) = 1;
  return term(1, std::move(m));
}

Poly Poly::term(const Gauss& c, Monomial m) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  auto d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Gauss Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Gauss() : it->second;
}

Gauss Poly::leading_coefficient() const {
  return terms_.empty() ? Gauss() : terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Gauss& c) {
  if (m.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "monomial variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::derivative(std::size_t var) const {
  Poly d(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) continue;
    Monomial dm = m;
    dm.exps[var] -= 1;
    d.add_term(dm, c * Gauss(static_cast<long>(m.exps[var])));
  }
  return d;
}

void Poly::check_vars(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count");
}

Poly& Poly::operator+=(const Poly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Gauss& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_vars(b);
  Poly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Poly pow(const Poly& f, unsigned k) {
  Poly result = Poly::constant(f.nvars(), 1);
  Poly base = f;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

namespace {

// Coefficient text for a term; `negative` receives the sign pulled out.
std::string coefficient_text(const Gauss& c, bool constant_term, bool& negative) {
  negative = false;
  if (c.is_real() || sgn(c.re()) == 0) {
    Gauss mag = c;
    if ((c.is_real() && sgn(c.re()) < 0) || (!c.is_real() && sgn(c.im()) < 0)) {
      negative = true;
      mag = -c;
    }
    if (mag.is_one() && !constant_term) return "";
    return mag.str();
  }
  return "(" + c.str() + ")";
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.exps.size(); ++k) {
    if (m.exps[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += variable_name(m.nvars(), k);
    if (m.exps[k] > 1) s += "^" + std::to_string(m.exps[k]);
  }
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_text(m);
    bool negative = false;
    std::string coef = coefficient_text(c, mono.empty(), negative);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !mono.empty()) out += '*';
    out += mono;
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : nvars_(nvars) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Poly parse() {
    if (s_.empty()) fail("empty polynomial");
    Poly result(nvars_);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t k = 0; k <= s_.size(); ++k) {
      char ch = k < s_.size() ? s_[k] : '\0';
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      bool boundary = ch == '\0' || (depth == 0 && k > start && (ch == '+' || ch == '-') && s_[k - 1] != '^');
      if (boundary) {
        result += parse_term(std::string_view(s_).substr(start, k - start));
        start = k;
      }
    }
    if (depth != 0) fail("unbalanced parentheses");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " in polynomial '" + s_ + "'");
  }

  Poly parse_term(std::string_view t) {
    Gauss coef = 1;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
      if (t.front() == '-') coef = -1;
      t.remove_prefix(1);
    }
    if (t.empty()) fail("empty term");
    Monomial mono{std::vector<std::uint32_t>(nvars_, 0)};
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t k = 0; k <= t.size(); ++k) {
      char ch = k < t.size() ? t[k] : '\0';
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == '\0' || (ch == '*' && depth == 0)) {
        parse_factor(t.substr(start, k - start), coef, mono);
        start = k + 1;
      }
    }
    return Poly::term(coef, std::move(mono));
  }

  void parse_factor(std::string_view f, Gauss& coef, Monomial& mono) {
    if (f.empty()) fail("empty factor");
    if (f.front() == '(') {
      if (f.back() != ')') fail("unterminated coefficient");
      coef *= Gauss::parse(f.substr(1, f.size() - 2));
      return;
    }
    std::string_view base = f;
    std::uint32_t exponent = 1;
    if (auto caret = f.find('^'); caret != std::string_view::npos) {
      base = f.substr(0, caret);
      std::string_view e = f.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        fail("bad exponent");
      exponent = static_cast<std::uint32_t>(std::stoul(std::string(e)));
    }
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (base == variable_name(nvars_, v)) {
        mono.exps[v] += exponent;
        return;
      }
    }
    if (base.size() != f.size()) fail("exponent on a coefficient");
    coef *= Gauss::parse(f);
  }

  std::string s_;
  std::size_t nvars_;
};

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace

Poly Poly::parse(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

Poly linear_form_power(std::span<const Gauss> coeffs, unsigned k) {
  const std::size_t n = coeffs.size();
  // powers[j][p] = coeffs[j]^p
  std::vector<std::vector<Gauss>> powers(n, std::vector<Gauss>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    powers[j][0] = 1;
    for (unsigned p = 1; p <= k; ++p) powers[j][p] = powers[j][p - 1] * coeffs[j];
  }
  const Integer kfact = factorial(k);
  Poly out(n);
  for (const Monomial& m : monomials_of_degree(n, k)) {
    Integer denom = 1;
    Gauss c = 1;
    for (std::size_t j = 0; j < n && !c.is_zero(); ++j) {
      denom *= factorial(m.exps[j]);
      c *= powers[j][m.exps[j]];
    }
    if (c.is_zero()) continue;
    Integer multinomial = kfact / denom;
    out.add_term(m, c * Gauss(Rational(multinomial)));
  }
  return out;
}

namespace {

// images[i][p] = (row i of g applied to x)^p for p <= max_exp[i].
std::vector<std::vector<Poly>> linear_form_powers(const QiMatrix& g, std::span<const std::uint32_t> max_exp) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Poly>> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i].reserve(max_exp[i] + 1);
    images[i].push_back(Poly::constant(n, 1));
    if (max_exp[i] == 0) continue;
    auto row = g.row(i);
    images[i].push_back(linear_form_power(row, 1));
    for (std::uint32_t p = 2; p <= max_exp[i]; ++p) images[i].push_back(linear_form_power(row, p));
  }
  return images;
}

Poly substitute_monomial(const Monomial& m, const std::vector<std::vector<Poly>>& images) {
  Poly p = images[0][m.exps[0]];
  for (std::size_t i = 1; i < m.exps.size(); ++i)
    if (m.exps[i]) p = p * images[i][m.exps[i]];
  return p;
}

void update_max_exp(const Poly& f, std::vector<std::uint32_t>& max_exp) {
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.exps.size(); ++i) max_exp[i] = std::max(max_exp[i], m.exps[i]);
}

Poly act_with(const std::vector<std::vector<Poly>>& images, const Poly& f) {
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) out += substitute_monomial(m, images) * c;
  return out;
}

}  // namespace

Poly act(const QiMatrix& g, const Poly& f) {
  if (!g.is_square() || g.rows() != f.nvars())
    throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  std::vector<std::uint32_t> max_exp(f.nvars(), 0);
  update_max_exp(f, max_exp);
  return act_with(linear_form_powers(g, max_exp), f);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial m{std::vector<std::uint32_t>(nvars, 0)};
  // Recursive lexicographic descent: x0 exponent from d down to 0.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      m.exps[var] = remaining;
      out.push_back(m);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      m.exps[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monos_(monomials_of_degree(nvars, degree)) {
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], k);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error(ErrorKind::DimensionMismatch, "monomial not of basis degree");
  return it->second;
}

QiVector MonomialBasis::coords(const Poly& f) const {
  if (f.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "variable count");
  QiVector v(size());
  for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
  return v;
}

Poly MonomialBasis::poly(std::span<const Gauss> coords) const {
  if (coords.size() != size()) throw Error(ErrorKind::DimensionMismatch, "coordinate length");
  Poly p(nvars_);
  for (std::size_t k = 0; k < coords.size(); ++k) p.add_term(monos_[k], coords[k]);
  return p;
}

QiMatrix substitution_matrix(const QiMatrix& g, const MonomialBasis& basis) {
  if (!g.is_square() || g.rows() != basis.nvars())
    throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  std::vector<std::uint32_t> max_exp(basis.nvars(), basis.degree());
  auto images = linear_form_powers(g, max_exp);
  const std::size_t size = basis.size();
  QiMatrix s(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    Poly p = substitute_monomial(basis[col], images);
    for (const auto& [m, c] : p.terms()) s(basis.index_of(m), col) = c;
  }
  return s;
}

// ---------------------------------------------------------------------------
// PolyVec

PolyVec::PolyVec(std::vector<Poly> comps) : comps_(std::move(comps)) {
  for (const auto& p : comps_)
    if (p.nvars() != comps_.front().nvars()) throw Error(ErrorKind::DimensionMismatch, "mixed variable counts");
}

PolyVec PolyVec::zero(std::size_t m, std::size_t nvars) { return PolyVec(std::vector<Poly>(m, Poly(nvars))); }

PolyVec PolyVec::parse(std::span<const std::string> comps, std::size_t nvars) {
  std::vector<Poly> ps;
  ps.reserve(comps.size());
  for (const auto& c : comps) ps.push_back(Poly::parse(c, nvars));
  return PolyVec(std::move(ps));
}

bool PolyVec::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyVec::degree() const {
  int d = -1;
  for (const auto& p : comps_) {
    if (p.is_zero()) continue;
    if (d >= 0 && p.degree() != d) throw Error(ErrorKind::InvalidInput, "components of different degrees");
    d = p.degree();
  }
  return d;
}

bool PolyVec::is_homogeneous() const {
  int d = -1;
  for (const auto& p : comps_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    if (d >= 0 && p.degree() != d) return false;
    d = p.degree();
  }
  return true;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  for (std::size_t k = 0; k < size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  for (std::size_t k = 0; k < size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

PolyVec& PolyVec::operator*=(const Gauss& s) {
  for (auto& p : comps_) p *= s;
  return *this;
}

PolyVec operator*(const Poly& p, const PolyVec& v) {
  PolyVec out = v;
  for (auto& c : out.comps_) c = p * c;
  return out;
}

std::string PolyVec::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (k) s += ", ";
    s += comps_[k].str();
  }
  return s + ")";
}

QiVector PolyVec::coords(const MonomialBasis& basis) const {
  QiVector v;
  v.reserve(size() * basis.size());
  for (const auto& p : comps_) {
    QiVector c = basis.coords(p);
    v.insert(v.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  return v;
}

PolyVec PolyVec::from_coords(std::span<const Gauss> coords, std::size_t m, const MonomialBasis& basis) {
  if (coords.size() != m * basis.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate length");
  std::vector<Poly> comps;
  comps.reserve(m);
  for (std::size_t k = 0; k < m; ++k) comps.push_back(basis.poly(coords.subspan(k * basis.size(), basis.size())));
  return PolyVec(std::move(comps));
}

PolyVec act_vec(const QiMatrix& g, const PolyVec& f) {
  if (f.size() == 0) return f;
  if (!g.is_square() || g.rows() != f.nvars())
    throw Error(ErrorKind::DimensionMismatch, "group element size does not match variable count");
  // Powers of the substituted linear forms are shared by all components.
  std::vector<std::uint32_t> max_exp(f.nvars(), 0);
  for (const auto& p : f) update_max_exp(p, max_exp);
  auto images = linear_form_powers(g, max_exp);
  std::vector<Poly> comps;
  comps.reserve(f.size());
  for (const auto& p : f) comps.push_back(act_with(images, p));
  return PolyVec(std::move(comps));
}

PolyVec mat_apply(const QiMatrix& rho, const PolyVec& f) {
  if (rho.cols() != f.size()) throw Error(ErrorKind::DimensionMismatch, "representation degree vs vector length");
  std::vector<Poly> comps(rho.rows(), Poly(f.nvars()));
  for (std::size_t r = 0; r < rho.rows(); ++r)
    for (std::size_t c = 0; c < rho.cols(); ++c)
      if (!rho(r, c).is_zero()) comps[r] += f[c] * rho(r, c);
  return PolyVec(std::move(comps));
}

PolyVec normalize(const PolyVec& f) {
  for (const auto& p : f)
    if (!p.is_zero()) return f * p.leading_coefficient().inverse();
  throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
}

}  // namespace reflectinv
