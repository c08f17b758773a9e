#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "reflectinv/catalog.hpp"
#include "reflectinv/kernels.hpp"
#include "reflectinv/rep.hpp"

using namespace reflectinv;

namespace {

const Gauss I = Gauss::i();

const CatalogEntry& entry() {
  static const CatalogEntry e = catalog_get("st8");
  return e;
}

const MatrixGroup& st8() {
  static const MatrixGroup g = close(entry().generators);
  return g;
}

Representation ext(const std::string& name) { return rep_extend(resolve_rep(entry(), name), st8()); }

}  // namespace

TEST_CASE("rep_extend examples") {
  Representation r1 = ext("rho1");
  for (const auto& m : r1.image_table()) CHECK(m == QiMatrix{{1}});

  Representation r3 = ext("rho3");
  std::set<QiMatrix> values(r3.image_table().begin(), r3.image_table().end());
  CHECK(values == std::set<QiMatrix>{QiMatrix{{1}}, QiMatrix{{I}}, QiMatrix{{-1}}, QiMatrix{{-I}}});
  // rho3 is the determinant.
  for (std::size_t i = 0; i < st8().order(); ++i) CHECK(r3.image(i)(0, 0) == mat_det(st8().element(i)));

  Representation r10 = ext("rho10");
  CHECK(r10.image_table() == st8().elements());
}

TEST_CASE("full homomorphism table for every catalog representation") {
  for (const auto& name : rep_names(entry())) {
    CAPTURE(name);
    Representation r = ext(name);
    CHECK(kernels::serial::homomorphism_defects(st8(), r.image_table()) == 0);
  }
}

TEST_CASE("rep_extend rejects inconsistent images") {
  Representation bad("bad", {QiMatrix{{I}}, QiMatrix{{I}}});
  try {
    rep_extend(bad, st8());
    FAIL("expected NotAHomomorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAHomomorphism);
  }
  Representation short_rep("short", {QiMatrix{{1}}});
  CHECK_THROWS_AS(rep_extend(short_rep, st8()), Error);
  CHECK_THROWS_AS(Representation("sing", {QiMatrix{{0}}, QiMatrix{{1}}}), Error);
}

TEST_CASE("characters") {
  Character c1 = character(ext("rho1"));
  for (const auto& v : c1.values) CHECK(v == Gauss(1));
  CHECK(character(ext("rho10")).values[0] == Gauss(2));
  CHECK(character(ext("rho13")).values[*st8().find(QiMatrix::diag({1, I}))] == I);
}

TEST_CASE("characters at inverses are conjugates") {
  for (const auto& name : rep_names(entry())) {
    Character c = character(ext(name));
    for (std::size_t i = 0; i < st8().order(); ++i) CHECK(c.values[st8().inverse_of(i)] == c.values[i].conj());
  }
}

TEST_CASE("tensor") {
  Representation r33 = tensor(resolve_rep(entry(), "rho3"), resolve_rep(entry(), "rho3"));
  CHECK(r33.gen_images()[0] == QiMatrix{{-1}});
  Representation r310 = tensor(resolve_rep(entry(), "rho3"), resolve_rep(entry(), "rho10"));
  CHECK(r310.degree() == 2);
  CHECK(r310.gen_images()[0] == -I * entry().generators[0]);
  Character a = character(ext("rho3")), b = character(ext("rho5")), ab = character(ext("rho3*rho5"));
  for (std::size_t i = 0; i < st8().order(); ++i) CHECK(ab.values[i] == a.values[i] * b.values[i]);
  Representation one("one", {QiMatrix{{1}}});
  CHECK_THROWS_AS(tensor(one, resolve_rep(entry(), "rho3")), Error);
}

TEST_CASE("inner products") {
  const MatrixGroup& g = st8();
  Character c1 = character(ext("rho1")), c3 = character(ext("rho3")), c10 = character(ext("rho10"));
  CHECK(char_inner(c1, c1, g) == Gauss(1));
  CHECK(char_inner(c10, c10, g) == Gauss(1));
  CHECK(char_inner(c1, c3, g).is_zero());

  // Oracle: the same sum in floating point over an independent closure.
  auto els = oracle::close({oracle::to_cmat(entry().generators[0]), oracle::to_cmat(entry().generators[1])});
  double s = 0;
  for (const auto& m : els) s += std::norm(oracle::trace(m));
  CHECK(s / static_cast<double>(els.size()) == doctest::Approx(1.0));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(ext("rho1"), st8()));
  CHECK(is_irreducible(ext("rho15"), st8()));
  Representation sq = ext("rho10*rho10");
  CHECK(sq.degree() == 4);
  CHECK_FALSE(is_irreducible(sq, st8()));
  Character c = character(sq);
  CHECK(char_inner(c, character(ext("rho1")), st8()) == Gauss(0));
  CHECK(char_inner(c, c, st8()) == Gauss(2));
}

TEST_CASE("tensor inner products are non-negative integers") {
  const auto names = rep_names(entry());
  std::vector<Character> irr;
  for (const auto& n : names) irr.push_back(character(ext(n)));
  for (const char* expr : {"rho10*rho10", "rho13*rho5", "rho15*rho10", "rho5*rho5"}) {
    Character c = character(ext(expr));
    Integer total = 0;
    for (std::size_t k = 0; k < irr.size(); ++k) {
      Gauss m = char_inner(c, irr[k], st8());
      CHECK(m.is_integer());
      CHECK(m.re() >= 0);
      total += m.re().get_num() * static_cast<long>(resolve_rep(entry(), names[k]).degree());
    }
    CHECK(total == static_cast<long>(resolve_rep(entry(), expr).degree()));
  }
}

TEST_CASE("image_group") {
  CHECK(image_group(resolve_rep(entry(), "rho3")).order() == 4);
  CHECK(image_group(resolve_rep(entry(), "rho15")).order() == 96);
}
