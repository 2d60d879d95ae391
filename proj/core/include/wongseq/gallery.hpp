#pragma once

// Named constructions of matrix spaces and random instance generators.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "wongseq/linalg.hpp"
#include "wongseq/matrix_space.hpp"

namespace wongseq::gallery {

// The 3x3 skew-symmetric matrices: E12-E21, E23-E32, E13-E31.
template <ExactField F>
MatSpace<F> sk3(const F& f) {
  const auto one = f.one(), minus = f.neg(f.one());
  std::vector<Matrix<F>> g(3, Matrix<F>(f, 3, 3));
  g[0](0, 1) = one;
  g[0](1, 0) = minus;
  g[1](1, 2) = one;
  g[1](2, 1) = minus;
  g[2](0, 2) = one;
  g[2](2, 0) = minus;
  return MatSpace<F>::from_spanning(f, 3, 3, g);
}

namespace detail {
template <ExactField F>
void check_lift(const MatSpace<F>& sp, const Matrix<F>& a) {
  if (!sp.is_square() || a.rows() != sp.rows() || a.cols() != sp.cols())
    throw Error(ErrorCode::NotSquare, "lift needs a square space and a matching square matrix");
  if (!inverse(a)) throw Error(ErrorCode::SingularS, "lift matrix must be nonsingular");
}
}  // namespace detail

// <Y_1..Y_m, Z> with Y_i = [[A, B_i], [0, 0]] and Z = [[0, 0], [A, 0]].
template <ExactField F>
MatSpace<F> yz_lift(const MatSpace<F>& sp, const Matrix<F>& a) {
  detail::check_lift(sp, a);
  const std::size_t n = sp.rows();
  std::vector<Matrix<F>> g;
  for (const auto& b : sp.gens()) {
    Matrix<F> y(sp.field(), 2 * n, 2 * n);
    y.set_block(0, 0, a);
    y.set_block(0, n, b);
    g.push_back(std::move(y));
  }
  Matrix<F> z(sp.field(), 2 * n, 2 * n);
  z.set_block(n, 0, a);
  g.push_back(std::move(z));
  return MatSpace<F>::from_spanning(sp.field(), 2 * n, 2 * n, g);
}

// Y'_i = [[A, B_i + A], [0, 0]] and Z' = [[0, 0], [A, A]].
template <ExactField F>
MatSpace<F> yz_lift_shifted(const MatSpace<F>& sp, const Matrix<F>& a) {
  detail::check_lift(sp, a);
  const std::size_t n = sp.rows();
  std::vector<Matrix<F>> g;
  for (const auto& b : sp.gens()) {
    Matrix<F> y(sp.field(), 2 * n, 2 * n);
    y.set_block(0, 0, a);
    y.set_block(0, n, b + a);
    g.push_back(std::move(y));
  }
  Matrix<F> z(sp.field(), 2 * n, 2 * n);
  z.set_block(n, 0, a);
  z.set_block(n, n, a);
  g.push_back(std::move(z));
  return MatSpace<F>::from_spanning(sp.field(), 2 * n, 2 * n, g);
}

// <[[0, B_i], [0, 0]]> after zero-padding B_i to N x N, N = max(rows, cols).
template <ExactField F>
MatSpace<F> strict_upper_embed(const MatSpace<F>& sp) {
  const std::size_t n = std::max(sp.rows(), sp.cols());
  std::vector<Matrix<F>> g;
  for (const auto& b : sp.gens()) {
    Matrix<F> y(sp.field(), 2 * n, 2 * n);
    y.set_block(0, n, b.padded(n, n));
    g.push_back(std::move(y));
  }
  return MatSpace<F>::from_spanning(sp.field(), 2 * n, 2 * n, g);
}

inline FiniteField::value_type random_element(const FiniteField& f, std::mt19937_64& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

inline std::vector<FiniteField::value_type> random_nonzero_vector(const FiniteField& f, std::size_t n,
                                                                  std::mt19937_64& rng) {
  std::vector<FiniteField::value_type> v(n);
  do {
    for (auto& x : v) x = random_element(f, rng);
  } while (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }));
  return v;
}

inline Matrix<FiniteField> random_matrix(const FiniteField& f, std::size_t r, std::size_t c,
                                         std::mt19937_64& rng) {
  Matrix<FiniteField> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(f, rng);
  return m;
}

inline Matrix<FiniteField> random_nonsingular(const FiniteField& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

// Span of m random rank-1 matrices x y^T.
inline MatSpace<FiniteField> random_rank1_space(const FiniteField& f, std::size_t rows, std::size_t cols,
                                                std::size_t m, std::mt19937_64& rng) {
  std::vector<Matrix<FiniteField>> g;
  for (std::size_t k = 0; k < m; ++k) {
    const auto x = random_nonzero_vector(f, rows, rng);
    const auto y = random_nonzero_vector(f, cols, rng);
    Matrix<FiniteField> b(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = f.mul(x[i], y[j]);
    g.push_back(std::move(b));
  }
  return MatSpace<FiniteField>::from_spanning(f, rows, cols, g);
}

struct TriangularInstance {
  std::vector<Matrix<FiniteField>> triangular;  // T_i
  std::vector<Matrix<FiniteField>> gens;        // Q T_i P^-1
  Matrix<FiniteField> q;
  Matrix<FiniteField> p;
};

// Random upper-triangular T_1..T_m conjugated to Q T_i P^-1. With
// zero_slot set, every T_i has a zero at that diagonal position.
inline TriangularInstance random_triangular(const FiniteField& f, std::size_t n, std::size_t m,
                                            std::mt19937_64& rng,
                                            std::optional<std::size_t> zero_slot = std::nullopt) {
  auto q = random_nonsingular(f, n, rng);
  auto p = random_nonsingular(f, n, rng);
  const auto pinv = *inverse(p);
  TriangularInstance inst{{}, {}, q, p};
  for (std::size_t k = 0; k < m; ++k) {
    Matrix<FiniteField> t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) t(i, j) = random_element(f, rng);
    if (zero_slot) t(*zero_slot, *zero_slot) = 0;
    inst.gens.push_back(q * t * pinv);
    inst.triangular.push_back(std::move(t));
  }
  return inst;
}

}  // namespace wongseq::gallery
