#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "reflectinv/exactmath.hpp"

using namespace reflectinv;

namespace {

const Gauss I = Gauss::i();

QiMatrix T() { return (Gauss(1) + I) * frac(1, 2) * QiMatrix{{1, 1}, {1, -1}}; }
QiMatrix D() { return QiMatrix::diag({1, I}); }

Gauss random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return Gauss(Rational(num(rng), den(rng)) , Rational(num(rng), den(rng))) ;
}

}  // namespace

TEST_CASE("gauss_parse reads the entry-text grammar") {
  CHECK(gauss_parse("1/2+1/2i") == (Gauss(1) + I) * frac(1, 2));
  CHECK(gauss_parse("-i") == -I);
  CHECK(gauss_parse("14") == Gauss(14));
  CHECK(gauss_parse("i") == I);
  CHECK(gauss_parse("3/4i") == I * frac(3, 4));
  CHECK(gauss_parse("-2-i") == Gauss(-2) - I);
  CHECK(gauss_parse("+5") == Gauss(5));
  CHECK(gauss_parse(" 2/4 ") == frac(1, 2));
}

TEST_CASE("gauss_parse rejects malformed text") {
  for (const char* bad : {"", "1/0", "abc", "1+", "1+2", "i1", "1//2", "1/2/3", "--1", "1.5", "1 + i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(gauss_parse(bad), Error);
  }
  try {
    gauss_parse("3/0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("gauss_print is canonical") {
  CHECK(gauss_print((Gauss(1) + I) * frac(1, 2)) == "1/2+1/2i");
  CHECK(gauss_print(-I) == "-i");
  CHECK(gauss_print(Gauss(14)) == "14");
  CHECK(gauss_print(Gauss()) == "0");
  CHECK(gauss_print(Gauss(-1) + I * frac(-3, 2)) == "-1-3/2i");
}

TEST_CASE("parse and print round-trip on random values") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    Gauss a = random_gauss(rng);
    CHECK(gauss_parse(gauss_print(a)) == a);
  }
}

TEST_CASE("gauss_inverse") {
  CHECK(gauss_inverse((Gauss(1) + I) * frac(1, 2)) == Gauss(1) - I);
  CHECK(gauss_inverse(I) == -I);
  CHECK(gauss_inverse(Gauss(2)) == frac(1, 2));
  CHECK_THROWS_AS(gauss_inverse(Gauss()), Error);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Gauss a = random_gauss(rng);
    if (a.is_zero()) continue;
    CHECK((a * gauss_inverse(a)).is_one());
    CHECK(gauss_inverse(gauss_inverse(a)) == a);
  }
}

TEST_CASE("mat_mul on the group generators") {
  QiMatrix tt = mat_mul(T(), T());
  CHECK(tt == I * QiMatrix::identity(2));
  // Oracle: the same product in floating point.
  auto f = oracle::mul(oracle::to_cmat(T()), oracle::to_cmat(T()));
  CHECK(f[0][0].imag() == doctest::Approx(1.0));
  CHECK(f[0][1].real() == doctest::Approx(0.0));

  CHECK(mat_mul(QiMatrix::identity(2), D()) == D());
  CHECK(D() * D() * D() * D() == QiMatrix::identity(2));
  CHECK_THROWS_AS(mat_mul(QiMatrix(2, 3), QiMatrix(2, 3)), Error);
}

TEST_CASE("mat_det") {
  CHECK(mat_det(T()) == -I);
  CHECK(mat_det(D()) == I);
  CHECK(mat_det(QiMatrix::identity(3)) == Gauss(1));
  CHECK(mat_det(QiMatrix{{1, 2}, {2, 4}}).is_zero());
  CHECK_THROWS_AS(mat_det(QiMatrix(2, 3)), Error);
}

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(D()) == QiMatrix::diag({1, -I}));
  CHECK(T() * mat_inverse(T()) == QiMatrix::identity(2));
  CHECK(mat_inverse(QiMatrix::identity(3)) == QiMatrix::identity(3));
  try {
    mat_inverse(QiMatrix{{1, 1}, {1, 1}});
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }

  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    QiMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = random_gauss(rng);
    if (mat_det(a).is_zero()) continue;
    CHECK((mat_det(a) * mat_det(mat_inverse(a))).is_one());
    CHECK(a * mat_inverse(a) == QiMatrix::identity(3));
  }
}

TEST_CASE("rref and pivots") {
  auto r = rref(QiMatrix{{1, 1}, {1, 1}});
  CHECK(r.matrix == QiMatrix{{1, 1}, {0, 0}});
  CHECK(r.pivots == std::vector<std::size_t>{0});

  r = rref(QiMatrix::identity(3));
  CHECK(r.matrix == QiMatrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = rref(QiMatrix{{0, 1}, {1, 0}});
  CHECK(r.matrix == QiMatrix::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel_basis") {
  auto k = kernel_basis(QiMatrix{{1, 1}, {1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QiVector{-1, 1});
  CHECK(kernel_basis(QiMatrix::identity(2)).empty());
  CHECK(kernel_basis(QiMatrix(2, 3)).size() == 3);
}

TEST_CASE("rank, kernel and rref agree on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = dim(rng), cols = dim(rng);
    QiMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (sparse(rng) == 0) a(r, c) = random_gauss(rng);
    // A duplicated row forces rank deficiency some of the time.
    if (rows > 1 && t % 3 == 0)
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * I;
    auto red = rref(a);
    std::size_t zero_rows = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = red.matrix.row(r);
      if (std::all_of(row.begin(), row.end(), [](const Gauss& x) { return x.is_zero(); })) ++zero_rows;
    }
    CHECK(red.rank() == rows - zero_rows);
    auto ker = kernel_basis(a);
    CHECK(red.rank() == cols - ker.size());
    for (const auto& v : ker) {
      QiVector img = a.apply(v);
      CHECK(std::all_of(img.begin(), img.end(), [](const Gauss& x) { return x.is_zero(); }));
    }
    for (std::size_t k = 1; k < red.pivots.size(); ++k) CHECK(red.pivots[k - 1] < red.pivots[k]);
  }
}

TEST_CASE("kron block convention") {
  QiMatrix a{{1, 2}, {3, 4}};
  QiMatrix b{{0, 1}, {1, 0}};
  QiMatrix k = kron(a, b);
  CHECK(k(0, 1) == Gauss(1));
  CHECK(k(0, 3) == Gauss(2));
  CHECK(k(3, 2) == Gauss(4));
  CHECK(k.rows() == 4);
}
