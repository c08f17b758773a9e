#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflectinv/catalog.hpp"
#include "reflectinv/equivar.hpp"
#include "reflectinv/molien.hpp"

using namespace reflectinv;

namespace {

const CatalogEntry& entry() {
  static const CatalogEntry e = catalog_get("st8");
  return e;
}

const MatrixGroup& st8() {
  static const MatrixGroup g = close(entry().generators);
  return g;
}

Representation ext(const std::string& name) { return rep_extend(resolve_rep(entry(), name), st8()); }

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("scalar Molien series") {
  CHECK(molien_scalar(st8(), 16).str() == "1 + t^8 + t^12 + t^16");
  CHECK(molien_equivariant(st8(), ext("rho1"), 30) == molien_scalar(st8(), 30));
}

TEST_CASE("equivariant Molien coefficients") {
  TruncatedSeries s = molien_equivariant(st8(), ext("rho10"), 13);
  CHECK(s[13] == Gauss(2));
  CHECK(s.str() == "t + t^5 + t^9 + 2*t^13");

  const std::vector<QiMatrix> id{QiMatrix::identity(2)};
  MatrixGroup trivial = close(id);
  Representation one = rep_extend(trivial_rep(1), trivial);
  CHECK(molien_equivariant(trivial, one, 3).str() == "1 + 2*t + 3*t^2 + 4*t^3");
}

TEST_CASE("numerators over (1 - t^8)(1 - t^12)") {
  const std::vector<unsigned> den{8, 12};
  HilbertData h5 = numerator_wrt(molien_equivariant(st8(), ext("rho5"), 40), den);
  CHECK(h5.numerator == ints({0, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(h5.str() == "(t^4 + t^8)/((1 - t^8)*(1 - t^12))");
  CHECK(h5.verified_to == 40);
  HilbertData h15 = numerator_wrt(molien_equivariant(st8(), ext("rho15"), 40), den);
  CHECK(h15.numerator_str() == "t^3 + t^7 + t^11 + t^15");
  HilbertData h1 = numerator_wrt(molien_scalar(st8(), 40), den);
  CHECK(h1.numerator == ints({1}));
  HilbertData h3 = numerator_wrt(molien_equivariant(st8(), ext("rho3"), 40), den);
  CHECK(h3.str() == "t^6/((1 - t^8)*(1 - t^12))");
}

TEST_CASE("closed forms re-expand to the source series") {
  for (const auto& name : rep_names(entry())) {
    CAPTURE(name);
    Representation r = ext(name);
    TruncatedSeries s = molien_equivariant(st8(), r, 40);
    HilbertData h = numerator_wrt(s, {8, 12});
    CHECK(h.expand(40) == s);
    CHECK(h.nonnegative());
    CHECK(h.numerator_sum() == static_cast<long>(r.degree()));
    for (const auto& c : s.coeffs()) {
      CHECK(c.is_integer());
      CHECK(c.re() >= 0);
    }
  }
}

TEST_CASE("wrong denominators do not terminate") {
  TruncatedSeries s = molien_scalar(st8(), 40);
  try {
    numerator_wrt(s, {4, 12});
    FAIL("expected NonTerminatingNumerator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTerminatingNumerator);
  }
  CHECK_THROWS_AS(numerator_wrt(s, {8}), Error);
  // Too short a series leaves no evidence of termination.
  CHECK_THROWS_AS(numerator_wrt(molien_scalar(st8(), 10), {8, 12}), Error);
}

TEST_CASE("Molien coefficients equal slice dimensions") {
  for (const char* name : {"rho1", "rho3", "rho5", "rho10", "rho13", "rho15"}) {
    CAPTURE(name);
    Representation r = ext(name);
    TruncatedSeries s = molien_equivariant(st8(), r, 20);
    EquivariantSolver solver(st8(), r);
    for (unsigned d = 0; d <= 20; ++d) CHECK(s[d] == Gauss(static_cast<long>(solver.dim(d))));
  }
}

TEST_CASE("a representation paired with the wrong group is rejected") {
  // Same group, different element order: the image table no longer lines up.
  const std::vector<QiMatrix> swapped{entry().generators[1], entry().generators[0]};
  MatrixGroup other = close(swapped);
  REQUIRE(other.order() == 96);
  Representation r = ext("rho13");
  try {
    molien_equivariant(other, r, 12);
    FAIL("expected NonIntegralCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralCoefficient);
  }
}
