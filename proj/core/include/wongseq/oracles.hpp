#pragma once

// Exhaustive ground truth over small finite fields, and the rank-oracle
// greedy search.

#include <functional>
#include <vector>

#include "wongseq/matrix_space.hpp"

namespace wongseq {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct MaxRankResult {
  std::size_t rank = 0;
  std::vector<FiniteField::value_type> coefficients;  // first maximizer in lex order
  std::uint64_t enumerated = 0;
};

struct DiscResult {
  std::size_t disc = 0;
  Subspace<FiniteField> witness;  // first maximizer: by dimension, pivot pattern, free entries
  std::uint64_t enumerated = 0;
};

struct OracleReport {
  std::size_t max_rank = 0;
  std::size_t disc = 0;
  std::size_t cork = 0;
  std::vector<FiniteField::value_type> argmax_coefficients;
  Subspace<FiniteField> argmax_witness;
  std::uint64_t enumerated_elements = 0;
  std::uint64_t enumerated_subspaces = 0;
  bool is_compression = false;
};

// Number of subspaces of F_q^n, or cap + 1 once it exceeds cap.
std::uint64_t subspace_count(std::uint64_t q, std::size_t n, std::uint64_t cap);

MaxRankResult brute_max_rank(const MatSpace<FiniteField>& sp,
                             std::uint64_t budget = kDefaultOracleBudget);
DiscResult brute_disc(const MatSpace<FiniteField>& sp, std::uint64_t budget = kDefaultOracleBudget);
OracleReport oracle_report(const MatSpace<FiniteField>& sp,
                           std::uint64_t budget = kDefaultOracleBudget);
bool is_compression(const MatSpace<FiniteField>& sp, std::uint64_t budget = kDefaultOracleBudget);

template <ExactField F>
struct GreedyResult {
  std::size_t rank = 0;
  std::vector<typename F::value_type> coefficients;
  std::vector<std::size_t> trace;  // rank after start and after each improvement
};

// Starts at e_1 and moves along basis directions by nonzero steps lambda
// (rank+1 candidates) while the oracle reports a strict improvement.
template <ExactField F>
GreedyResult<F> blackbox_greedy(
    const std::function<std::size_t(const std::vector<typename F::value_type>&)>& rank_oracle,
    std::size_t m, std::size_t n, const F& field) {
  if (auto q = field.cardinality(); q && *q < n + 1)
    throw Error(ErrorCode::FieldTooSmall, field.spec().name() + " has fewer than n+1 elements");
  GreedyResult<F> res;
  res.coefficients.assign(m, field.zero());
  if (m == 0) {
    res.trace.push_back(0);
    return res;
  }
  res.coefficients[0] = field.one();
  res.rank = rank_oracle(res.coefficients);
  res.trace.push_back(res.rank);
  while (res.rank < n) {
    bool improved = false;
    const auto lambdas = distinct_elements(field, res.rank + 2);
    for (std::size_t k = 0; k < m && !improved; ++k) {
      for (std::size_t t = 1; t < lambdas.size(); ++t) {
        auto cand = res.coefficients;
        cand[k] = field.add(cand[k], lambdas[t]);
        const std::size_t r = rank_oracle(cand);
        if (r > res.rank) {
          res.coefficients = std::move(cand);
          res.rank = r;
          res.trace.push_back(r);
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return res;
}

template <ExactField F>
GreedyResult<F> blackbox_greedy(const MatSpace<F>& sp) {
  return blackbox_greedy<F>(
      [&](const std::vector<typename F::value_type>& c) { return rank(sp.combination(c)); },
      sp.dim(), std::min(sp.rows(), sp.cols()), sp.field());
}

}  // namespace wongseq
