#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reflectinv/catalog.hpp"
#include "reflectinv/group.hpp"
#include "reflectinv/poly.hpp"

using namespace reflectinv;

namespace {

const Gauss I = Gauss::i();

Poly P(const char* s) { return Poly::parse(s); }

PolyVec V(std::initializer_list<const char*> comps) {
  std::vector<Poly> ps;
  for (const char* c : comps) ps.push_back(P(c));
  return PolyVec(std::move(ps));
}

const MatrixGroup& st8() {
  static const MatrixGroup g = close(catalog_get("st8").generators);
  return g;
}

Poly random_poly(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_degree)), nterms(1, 4), c(-4, 4);
  Poly p(2);
  for (int t = nterms(rng); t > 0; --t) {
    unsigned d = static_cast<unsigned>(deg(rng));
    std::uniform_int_distribution<unsigned> e(0, d);
    unsigned a = e(rng);
    p.add_term(Monomial{{a, d - a}}, Gauss(Rational(c(rng), 3), Rational(c(rng), 2)));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical text") {
  Poly theta = P("x^8 + 14*x^4*y^4 + y^8");
  CHECK(theta.str() == "x^8 + 14*x^4*y^4 + y^8");
  CHECK(P("y^8 + x^8 + 14*x^4*y^4") == theta);
  CHECK(P("-x*y^5 + x^5*y").str() == "x^5*y - x*y^5");
  CHECK(P("(1/2+1/2i)*x + i*y").str() == "(1/2+1/2i)*x + i*y");
  CHECK(P("0").str() == "0");
  CHECK(P("3").str() == "3");
  CHECK(P("x - x").is_zero());
  CHECK_THROWS_AS(P("x^"), Error);
  CHECK_THROWS_AS(P("2*w"), Error);
}

TEST_CASE("text round-trips") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(rng, 9);
    CHECK(P(p.str().c_str()) == p);
  }
}

TEST_CASE("act on single polynomials") {
  const QiMatrix d = QiMatrix::diag({1, I});
  const QiMatrix t = (Gauss(1) + I) * frac(1, 2) * QiMatrix{{1, 1}, {1, -1}};
  CHECK(act(d, P("x^5*y")) == I * P("x^5*y"));
  Poly half = Poly::constant(2, (Gauss(1) + I) * frac(1, 2));
  CHECK(act(t, P("x")) == half * P("x") + half * P("y"));
  CHECK_THROWS_AS(act(QiMatrix::identity(3), P("x")), Error);
}

TEST_CASE("theta and phi are invariant under every element") {
  Poly theta = P("x^8 + 14*x^4*y^4 + y^8");
  Poly phi = P("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
  for (const auto& g : st8().elements()) {
    CHECK(act(g, theta) == theta);
    CHECK(act(g, phi) == phi);
  }
}

TEST_CASE("act_vec examples") {
  const QiMatrix d = QiMatrix::diag({1, I});
  CHECK(act_vec(d, V({"x", "y"})) == V({"x", "i*y"}));
  PolyVec f = V({"x^4 + y^4", "6*x^2*y^2"});
  CHECK(act_vec(QiMatrix::identity(2), f) == f);
  CHECK(act_vec(d, f) == V({"x^4 + y^4", "-6*x^2*y^2"}));
  CHECK(act_vec(d, f) == mat_apply(QiMatrix::diag({1, -1}), f));
}

TEST_CASE("action composition and multiplicativity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, st8().order() - 1);
  for (int k = 0; k < 60; ++k) {
    const QiMatrix& g = st8().element(pick(rng));
    const QiMatrix& h = st8().element(pick(rng));
    Poly f = random_poly(rng, 7), p = random_poly(rng, 5);
    CHECK(act(h, act(g, f)) == act(g * h, f));
    CHECK(act(g, f * p) == act(g, f) * act(g, p));
    CHECK(act(QiMatrix::identity(2), f) == f);
    CHECK(act(g, f).degree() == f.degree());
  }
}

TEST_CASE("monomials_of_degree") {
  auto m3 = monomials_of_degree(2, 3);
  REQUIRE(m3.size() == 4);
  CHECK(m3[0].exps == std::vector<std::uint32_t>{3, 0});
  CHECK(m3[1].exps == std::vector<std::uint32_t>{2, 1});
  CHECK(m3[3].exps == std::vector<std::uint32_t>{0, 3});
  CHECK(monomials_of_degree(2, 0).size() == 1);
  CHECK(monomials_of_degree(2, 8).size() == 9);
  CHECK(monomials_of_degree(3, 4).size() == 15);
}

TEST_CASE("normalize") {
  CHECK(normalize(V({"-x^5 + 5*x*y^4", "5*x^4*y - y^5"})) == V({"x^5 - 5*x*y^4", "-5*x^4*y + y^5"}));
  CHECK(normalize(V({"x", "y"})) == V({"x", "y"}));
  CHECK(normalize(V({"0", "3*x^2"})) == V({"0", "x^2"}));
  CHECK_THROWS_AS(normalize(V({"0", "0"})), Error);
}

TEST_CASE("substitution matrix columns") {
  const QiMatrix t = (Gauss(1) + I) * frac(1, 2) * QiMatrix{{1, 1}, {1, -1}};
  MonomialBasis b(2, 4);
  QiMatrix s = substitution_matrix(t, b);
  for (std::size_t k = 0; k < b.size(); ++k) {
    QiVector col(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) col[r] = s(r, k);
    Poly m = Poly::term(1, b[k]);
    CHECK(b.poly(col) == act(t, m));
  }
}

TEST_CASE("PolyVec coordinates and degree") {
  MonomialBasis b(2, 2);
  PolyVec f = V({"x^2", "x*y", "y^2"});
  QiVector c = f.coords(b);
  CHECK(c.size() == 9);
  CHECK(PolyVec::from_coords(c, 3, b) == f);
  CHECK(f.degree() == 2);
  CHECK(V({"x", "y^2"}).is_homogeneous() == false);
  CHECK(f.str() == "(x^2, x*y, y^2)");
}
