#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "wongseq/matrix_space.hpp"

namespace testing_support {

using wongseq::FiniteField;
using wongseq::Matrix;
using wongseq::MatSpace;
using wongseq::RationalField;
using wongseq::Subspace;

template <class F>
Matrix<F> mat(const F& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> r;
  for (auto row : rows) r.emplace_back(row);
  return Matrix<F>::from_ints(f, r);
}

// E_ij with 1-based indices.
template <class F>
Matrix<F> E(const F& f, std::size_t n, std::size_t i, std::size_t j) {
  return Matrix<F>::unit(f, n, n, i - 1, j - 1);
}

template <class F>
std::vector<typename F::value_type> vec(const F& f, std::initializer_list<long long> xs) {
  std::vector<typename F::value_type> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

template <class F>
Subspace<F> span(const F& f, std::size_t n, std::initializer_list<std::initializer_list<long long>> vs) {
  std::vector<std::vector<typename F::value_type>> out;
  for (auto v : vs) out.push_back(vec(f, v));
  return Subspace<F>::span(f, n, out);
}

template <class F>
MatSpace<F> space(const std::vector<Matrix<F>>& mats) {
  return MatSpace<F>::from_spanning(mats);
}

inline FiniteField::value_type random_element(const FiniteField& f, std::mt19937_64& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

inline Matrix<FiniteField> random_matrix(const FiniteField& f, std::size_t r, std::size_t c,
                                         std::mt19937_64& rng) {
  Matrix<FiniteField> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(f, rng);
  return m;
}

inline Subspace<FiniteField> random_subspace(const FiniteField& f, std::size_t n,
                                             std::mt19937_64& rng) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  return Subspace<FiniteField>::row_span(random_matrix(f, k, n, rng));
}

}  // namespace testing_support
