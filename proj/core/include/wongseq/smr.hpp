#pragma once

// Constructive maximum rank for matrix spaces spanned by rank-1 matrices:
// alternate the witness test with Power Overflow until a witness certifies
// the current element.

#include <optional>
#include <vector>

#include "wongseq/power_overflow.hpp"
#include "wongseq/wong.hpp"

namespace wongseq {

enum class SmrStatus { MaxRankFound, NonConstructiveRank, FailedPo };

inline const char* to_string(SmrStatus s) {
  switch (s) {
    case SmrStatus::MaxRankFound: return "max_rank_found";
    case SmrStatus::NonConstructiveRank: return "non_constructive_rank";
    case SmrStatus::FailedPo: return "failed_po";
  }
  return "?";
}

template <ExactField F>
struct SmrResult {
  SmrStatus status;
  F working_field;
  // Over working_field, one per generator of the input space.
  std::vector<typename F::value_type> coefficients;
  Matrix<F> matrix;
  std::size_t rank = 0;
  std::optional<Subspace<F>> witness;  // inside working_field^cols
  std::size_t c = 0;
  std::size_t iterations = 0;
  std::vector<std::size_t> ranks_visited;
};

template <ExactField F>
MatSpace<F> pad_square(const MatSpace<F>& sp) {
  const std::size_t n = std::max(sp.rows(), sp.cols());
  if (sp.is_square()) return sp;
  std::vector<Matrix<F>> mats;
  for (const auto& g : sp.gens()) mats.push_back(g.padded(n, n));
  return MatSpace<F>::from_spanning(sp.field(), n, n, mats);
}

// Move every coefficient, in order, to the first value in {0..n} that keeps
// the rank at least as large as before.
template <ExactField F>
std::vector<typename F::value_type> reduce_coefficients(const MatSpace<F>& sp,
                                                        std::vector<typename F::value_type> coeffs,
                                                        std::size_t n) {
  const F& f = sp.field();
  std::size_t target = rank(sp.combination(coeffs));
  const auto kappas = distinct_elements(f, n + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& k : kappas) {
      auto trial = coeffs;
      trial[i] = k;
      const std::size_t r = rank(sp.combination(trial));
      if (r >= target) {
        coeffs = std::move(trial);
        target = r;
        break;
      }
    }
  }
  return coeffs;
}

namespace detail {

inline MatSpace<FiniteField> embed_space(const MatSpace<FiniteField>& sp, const FieldEmbedding& e) {
  std::vector<Matrix<FiniteField>> mats;
  for (const auto& g : sp.gens()) mats.push_back(embed(g, e));
  return MatSpace<FiniteField>::from_spanning(e.target(), sp.rows(), sp.cols(), mats);
}

// Main loop over a field with at least N+1 elements, on the original
// (possibly rectangular) space.
template <ExactField F>
SmrResult<F> smr_loop(const MatSpace<F>& sp, std::size_t start) {
  using V = typename F::value_type;
  const F& f = sp.field();
  const MatSpace<F> sq = pad_square(sp);
  const std::size_t N = sq.rows();

  std::vector<V> coeffs(sp.dim(), f.zero());
  coeffs.at(start) = f.one();
  Matrix<F> a = sq.combination(coeffs);
  std::size_t r = rank(a);

  SmrResult<F> res{SmrStatus::MaxRankFound, f, {}, Matrix<F>(f, sp.rows(), sp.cols()), 0, {}, 0, 0, {r}};
  auto finish = [&](SmrStatus status) {
    res.status = status;
    res.coefficients = coeffs;
    res.matrix = sp.combination(coeffs);
    res.rank = r;
    return res;
  };

  for (std::size_t iter = 0;; ++iter) {
    res.iterations = iter + 1;
    auto rep = witness_test(a, sq);
    if (rep.exists) {
      Subspace<F> w = *rep.witness;
      if (sp.cols() < N) {
        std::vector<std::size_t> first(sp.cols());
        for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
        w = intersect(w, Subspace<F>::coordinate(f, N, first));
        w = Subspace<F>::row_span(w.basis().block(0, 0, w.dim(), sp.cols()));
      }
      res.witness = std::move(w);
      res.c = sp.cols() - r;
      return finish(SmrStatus::MaxRankFound);
    }

    const Matrix<F> ap = pseudo_inverse(a);
    std::vector<Matrix<F>> shifted;
    for (const auto& g : sq.gens()) shifted.push_back(g * ap);
    PoInstance<F> inst{MatSpace<F>::from_spanning(f, N, N, shifted), kernel(a * ap), image(a)};
    if (inst.d.dim() != sq.dim()) throw std::logic_error("smr: shifted generators became dependent");
    const auto po = solve_po(inst);
    if (!po.found) return finish(SmrStatus::FailedPo);

    const Matrix<F> b = sq.combination(po.coefficients);
    bool improved = false;
    for (const auto& lambda : distinct_elements(f, N + 1)) {
      Matrix<F> cand = a;
      cand.add_scaled(lambda, b);
      const std::size_t rc = rank(cand);
      if (rc > r) {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          coeffs[k] = f.mul_add(coeffs[k], lambda, po.coefficients[k]);
        r = rc;
        improved = true;
        break;
      }
    }
    if (!improved) return finish(SmrStatus::FailedPo);
    if constexpr (is_rational_field_v<F>) {
      coeffs = reduce_coefficients(sq, coeffs, N);
      r = rank(sq.combination(coeffs));
    }
    a = sq.combination(coeffs);
    res.ranks_visited.push_back(r);
    if (iter > N) throw std::logic_error("smr: rank increased more than N times");
  }
}

}  // namespace detail

// Starts from generator `start` (basis order). Small finite fields are
// extended to N+1 elements; the result then lives over the extension.
template <ExactField F>
SmrResult<F> smr(const MatSpace<F>& sp, std::size_t start = 0) {
  if (sp.is_zero()) throw Error(ErrorCode::EmptySpace, "smr needs a nonzero space");
  if (start >= sp.dim()) throw std::out_of_range("smr: start index beyond the basis");
  const std::size_t N = std::max(sp.rows(), sp.cols());
  if constexpr (is_rational_field_v<F>) {
    return detail::smr_loop(sp, start);
  } else {
    const auto sized = ensure_size(sp.field(), N + 1);
    if (!sized.extended) return detail::smr_loop(sp, start);
    auto res = detail::smr_loop(detail::embed_space(sp, sized.embedding), start);
    if (res.status == SmrStatus::MaxRankFound) res.status = SmrStatus::NonConstructiveRank;
    return res;
  }
}

// Restarts from every generator and keeps the first certified result, or the
// highest-rank uncertified one if none certifies.
template <ExactField F>
SmrResult<F> smr_best(const MatSpace<F>& sp) {
  std::optional<SmrResult<F>> best;
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    auto res = smr(sp, i);
    if (res.status != SmrStatus::FailedPo) return res;
    if (!best || res.rank > best->rank) best = std::move(res);
  }
  if (!best) throw Error(ErrorCode::EmptySpace, "smr needs a nonzero space");
  return *best;
}

template <ExactField F>
std::size_t smr_rank_only(const MatSpace<F>& sp) {
  if (sp.is_zero()) return 0;
  return smr(sp).rank;
}

}  // namespace wongseq
