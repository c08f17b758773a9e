#pragma once

// Independent floating-point oracle for tests. All matrices of the catalog
// have dyadic entries, so products stay exactly representable in double for
// the small word lengths involved; keys round to 1e-9 anyway.

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "reflectinv/exactmath.hpp"

namespace oracle {

using C = std::complex<double>;
using CMat = std::vector<std::vector<C>>;

inline CMat to_cmat(const reflectinv::QiMatrix& m) {
  CMat out(m.rows(), std::vector<C>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = C(m(r, c).re().get_d(), m(r, c).im().get_d());
  return out;
}

inline CMat mul(const CMat& a, const CMat& b) {
  CMat out(a.size(), std::vector<C>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline CMat eye(std::size_t n) {
  CMat out(n, std::vector<C>(n));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = 1;
  return out;
}

inline std::vector<long long> key(const CMat& m) {
  std::vector<long long> k;
  for (const auto& row : m)
    for (const auto& x : row) {
      k.push_back(std::llround(x.real() * 1e9));
      k.push_back(std::llround(x.imag() * 1e9));
    }
  return k;
}

/// Breadth-first closure in floating point.
inline std::vector<CMat> close(const std::vector<CMat>& gens) {
  std::vector<CMat> els{eye(gens[0].size())};
  std::map<std::vector<long long>, std::size_t> seen{{key(els[0]), 0}};
  for (std::size_t h = 0; h < els.size(); ++h)
    for (const auto& g : gens) {
      CMat n = mul(els[h], g);
      if (seen.emplace(key(n), els.size()).second) els.push_back(n);
    }
  return els;
}

inline C trace(const CMat& m) {
  C t = 0;
  for (std::size_t k = 0; k < m.size(); ++k) t += m[k][k];
  return t;
}

}  // namespace oracle
