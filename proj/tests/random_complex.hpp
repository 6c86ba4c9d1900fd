// Random complexes of vector spaces over F_p for round-trip suites.

#pragma once

#include <random>

#include "tate/field.hpp"
#include "tate/linalg.hpp"

namespace random_complexes {

using namespace tate;

using Mat = std::vector<std::vector<Fp>>;

inline Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
  Mat m(rows, std::vector<Fp>(cols));
  for (auto& r : m)
    for (auto& x : r) x = FieldTraits<Fp>::random(rng);
  return m;
}

/// Random complex: A_p = R * (left null space of A_{p-1})^T, some columns of R zeroed.
inline std::vector<Mat> random_complex(std::mt19937_64& rng, const std::vector<int>& beta) {
  std::vector<Mat> out;
  for (size_t p = 0; p + 1 < beta.size(); ++p) {
    ScalarMatrix<Fp> N = identity_matrix<Fp>(beta[p]);
    if (p) {
      const Mat& prev = out.back();
      ScalarMatrix<Fp> At = zero_matrix<Fp>(beta[p - 1], beta[p]);
      for (int r = 0; r < beta[p]; ++r)
        for (int c = 0; c < beta[p - 1]; ++c) At(c, r) = prev[r][c];
      N = kernel_basis<Fp>(At);
    }
    Mat R = random_mat(rng, beta[p + 1], (int)N.cols());
    for (auto& row : R)
      for (size_t k = 0; k < row.size(); ++k)
        if (rng() % 3 == 0) row[k] = Fp(0);
    Mat A(beta[p + 1], std::vector<Fp>(beta[p], Fp(0)));
    for (int r = 0; r < beta[p + 1]; ++r)
      for (int c = 0; c < beta[p]; ++c)
        for (Eigen::Index k = 0; k < N.cols(); ++k) A[r][c] += R[r][k] * N(c, k);
    out.push_back(A);
  }
  return out;
}

}  // namespace random_complexes
