#pragma once

// Nonsingular elements of triangularizable matrix spaces (recursive Wong
// reduction), the algebraic triangularizability test, and the modular
// pipeline for integer inputs.

#include <optional>
#include <stdexcept>
#include <vector>

#include "wongseq/wong.hpp"

namespace wongseq {

enum class TriKind { Nonsingular, Witness, Fail };

inline const char* to_string(TriKind k) {
  switch (k) {
    case TriKind::Nonsingular: return "nonsingular";
    case TriKind::Witness: return "witness";
    case TriKind::Fail: return "fail";
  }
  return "?";
}

template <ExactField F>
struct TriOutcome {
  TriKind kind = TriKind::Fail;
  std::vector<typename F::value_type> coefficients;  // one per input matrix
  std::optional<Subspace<F>> witness;
  std::size_t depth = 0;  // recursion levels used
};

namespace detail {

template <ExactField F>
TriOutcome<F> tri_list(const F& f, std::size_t n, const std::vector<Matrix<F>>& list) {
  using V = typename F::value_type;
  TriOutcome<F> out;
  const std::size_t m = list.size();
  if (n == 0) {
    out.kind = TriKind::Nonsingular;
    out.coefficients.assign(m, f.zero());
    return out;
  }
  if (n == 1) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!f.is_zero(list[i](0, 0))) {
        out.kind = TriKind::Nonsingular;
        out.coefficients.assign(m, f.zero());
        out.coefficients[i] = f.one();
        return out;
      }
    }
    out.kind = TriKind::Witness;
    out.witness = Subspace<F>::full(f, 1);
    return out;
  }

  const auto sp = MatSpace<F>::from_spanning(f, n, n, list);
  Matrix<F> stacked(f, n * sp.dim(), n);
  for (std::size_t k = 0; k < sp.dim(); ++k) stacked.set_block(k * n, 0, sp.gen(k));
  Subspace<F> common = kernel(stacked);
  if (!common.is_zero()) {
    out.kind = TriKind::Witness;
    out.witness = std::move(common);
    return out;
  }

  std::vector<Subspace<F>> limits;
  for (std::size_t i = 0; i < m; ++i) {
    limits.push_back(first_wong(list[i], sp).limit);
    if (image_of(sp, limits.back()).dim() < limits.back().dim()) {
      out.kind = TriKind::Witness;
      out.witness = limits.back();
      return out;
    }
  }
  std::size_t j = 0;
  while (j < m && limits[j].is_zero()) ++j;
  if (j == m) return out;

  const Subspace<F>& ustar = limits[j];
  const auto qdom = quotient_coords(ustar);
  const auto qcod = quotient_coords(image_of(sp, ustar));
  std::vector<Matrix<F>> induced;
  for (const auto& b : list) induced.push_back(qcod.proj * b * qdom.section);
  auto sub = tri_list(f, qdom.dim, induced);
  out.depth = sub.depth + 1;

  if (sub.kind == TriKind::Fail) return out;
  if (sub.kind == TriKind::Witness) {
    out.kind = TriKind::Witness;
    out.witness = sum(apply(qdom.section, *sub.witness), ustar);
    return out;
  }

  Matrix<F> e(f, n, n);
  for (std::size_t i = 0; i < m; ++i) e.add_scaled(sub.coefficients[i], list[i]);
  const auto lambdas = distinct_elements(f, n + 1);
  for (const V& lambda : lambdas) {
    for (const V& mu : lambdas) {
      Matrix<F> cand = e.scaled(mu);
      cand.add_scaled(lambda, list[j]);
      if (rank(cand) == n) {
        out.kind = TriKind::Nonsingular;
        out.coefficients.resize(m);
        for (std::size_t i = 0; i < m; ++i) out.coefficients[i] = f.mul(mu, sub.coefficients[i]);
        out.coefficients[j] = f.add(out.coefficients[j], lambda);
        return out;
      }
    }
  }
  return out;
}

}  // namespace detail

// Runs on a list of square matrices (dependencies allowed); coefficients
// refer to the list positions. Needs at least n+1 field elements.
template <ExactField F>
TriOutcome<F> tri_algo(const F& f, std::size_t n, const std::vector<Matrix<F>>& list) {
  if (list.empty()) throw Error(ErrorCode::EmptySpace, "tri_algo needs at least one matrix");
  for (const auto& b : list) {
    if (!(b.field() == f)) throw Error(ErrorCode::FieldMismatch, "matrix over " + b.field().spec().name());
    if (b.rows() != n || b.cols() != n) throw Error(ErrorCode::NotSquare, "tri_algo needs n x n matrices");
  }
  if (auto q = f.cardinality(); q && *q < n + 1)
    throw Error(ErrorCode::FieldTooSmall, f.spec().name() + " has fewer than n+1 elements");
  auto out = detail::tri_list(f, n, list);

  if (out.kind == TriKind::Nonsingular) {
    Matrix<F> s(f, n, n);
    for (std::size_t i = 0; i < list.size(); ++i) s.add_scaled(out.coefficients[i], list[i]);
    if (rank(s) != n) throw std::logic_error("tri_algo: returned combination is singular");
  } else if (out.kind == TriKind::Witness) {
    const auto sp = MatSpace<F>::from_spanning(f, n, n, list);
    if (!verify_witness(sp, *out.witness, 1)) throw std::logic_error("tri_algo: witness does not shrink");
  }
  return out;
}

template <ExactField F>
TriOutcome<F> tri_algo(const MatSpace<F>& sp) {
  if (!sp.is_square()) throw Error(ErrorCode::NotSquare, "tri_algo needs a square space");
  if (sp.is_zero()) {
    TriOutcome<F> out;
    out.kind = TriKind::Witness;
    out.witness = Subspace<F>::full(sp.field(), sp.rows());
    if (sp.rows() == 0) out.kind = TriKind::Nonsingular;
    return out;
  }
  return tri_algo(sp.field(), sp.rows(), sp.gens());
}

// With s in B nonsingular: A = <B s^-1, I>, D its algebra, J = D [A,A] D.
// B is triangularizable over an extension iff J^n = 0.
template <ExactField F>
bool is_triangularizable_with_nonsingular(const MatSpace<F>& sp, const Matrix<F>& s) {
  if (!sp.is_square() || !s.is_square() || s.rows() != sp.rows())
    throw Error(ErrorCode::NotSquare, "triangularizability test needs square matrices of one size");
  const auto sinv = inverse(s);
  if (!sinv) throw Error(ErrorCode::SingularS, "pivot matrix is singular");
  const F& f = sp.field();
  const std::size_t n = sp.rows();
  std::vector<Matrix<F>> mats;
  for (const auto& g : sp.gens()) mats.push_back(g * *sinv);
  mats.push_back(Matrix<F>::identity(f, n));
  const auto a = MatSpace<F>::from_spanning(f, n, n, mats);
  const auto d = generated_algebra(a);
  const auto j = product(product(d, commutator_space(a)), d);
  MatSpace<F> p = j;
  for (std::size_t i = 1; i < n && !p.is_zero(); ++i) p = product(p, j);
  return p.is_zero();
}

struct RationalSditReport {
  bool nonsingular = false;  // false means inconclusive
  std::optional<std::uint32_t> prime_used;
  std::vector<mpz_class> integer_coefficients;  // against the denominator-cleared generators
  std::vector<mpq_class> coefficients;          // against the generators as given
  std::vector<std::uint32_t> primes_tried;
  mpz_class bound_used;
  std::vector<mpz_class> scales;  // per-generator common denominators
};

// ceil(n^(n/2)) * ((n+1) m b)^n
mpz_class sdit_prime_bound(std::size_t n, std::size_t m, const mpz_class& b);

RationalSditReport rational_sdit(const std::vector<Matrix<RationalField>>& gens,
                                 std::optional<std::size_t> prime_budget = std::nullopt);

}  // namespace wongseq
