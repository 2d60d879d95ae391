#pragma once

// Wong sequences of a pair (<a>, B) and the pseudo-inverse witness test.

#include <optional>
#include <stdexcept>
#include <vector>

#include "wongseq/matrix_space.hpp"

namespace wongseq {

enum class WongKind { First, Second };

template <ExactField F>
struct WongTrace {
  WongKind kind;
  // U_0, U_1, ... (or W_0, W_1, ...) up to and including the first repeat.
  std::vector<Subspace<F>> terms;
  Subspace<F> limit;
};

template <ExactField F>
struct WitnessReport {
  bool exists = false;
  std::optional<Subspace<F>> witness;
  std::size_t c = 0;
  std::optional<std::size_t> stopped_at;  // 1-based index of the first W_i outside im(a)
  std::vector<Subspace<F>> iterates;      // W_1, W_2, ... as computed
};

namespace detail {

template <ExactField F>
MatSpace<F> single(const Matrix<F>& a) {
  return MatSpace<F>::from_spanning(a.field(), a.rows(), a.cols(), {a});
}

template <ExactField F>
void check_pair(const Matrix<F>& a, const MatSpace<F>& sp) {
  if (a.rows() != sp.rows() || a.cols() != sp.cols())
    throw Error(ErrorCode::DimMismatch, "anchor matrix shape differs from the space");
  if (!(a.field() == sp.field())) throw Error(ErrorCode::FieldMismatch, "anchor field differs");
}

}  // namespace detail

// U_0 = F^cols, U_{i+1} = B^{-1}(a U_i).
template <ExactField F>
WongTrace<F> first_wong(const Matrix<F>& a, const MatSpace<F>& sp) {
  detail::check_pair(a, sp);
  const auto sa = detail::single(a);
  std::vector<Subspace<F>> terms{Subspace<F>::full(sp.field(), sp.cols())};
  while (true) {
    auto next = preimage_of(sp, image_of(sa, terms.back()));
    const bool repeat = next == terms.back();
    terms.push_back(std::move(next));
    if (repeat) break;
  }
  Subspace<F> limit = terms.back();
  return {WongKind::First, std::move(terms), std::move(limit)};
}

// W_0 = 0, W_{i+1} = B(a^{-1} W_i).
template <ExactField F>
WongTrace<F> second_wong(const Matrix<F>& a, const MatSpace<F>& sp) {
  detail::check_pair(a, sp);
  const auto sa = detail::single(a);
  std::vector<Subspace<F>> terms{Subspace<F>::zero(sp.field(), sp.rows())};
  while (true) {
    auto next = image_of(sp, preimage_of(sa, terms.back()));
    const bool repeat = next == terms.back();
    terms.push_back(std::move(next));
    if (repeat) break;
  }
  Subspace<F> limit = terms.back();
  return {WongKind::Second, std::move(terms), std::move(limit)};
}

template <ExactField F>
bool verify_witness(const MatSpace<F>& sp, const Subspace<F>& u, std::size_t c) {
  if (u.ambient_dim() != sp.cols()) throw Error(ErrorCode::DimMismatch, "witness ambient dimension");
  const std::size_t image_dim = image_of(sp, u).dim();
  return u.dim() >= image_dim && u.dim() - image_dim >= c;
}

// Iterates W_{i+1} = (B A')(W_i) from W_1 = (B A')(ker(a A')). If the limit
// stays inside im(a), a has maximum rank and a^{-1}(W*) is a cork(a)-witness.
template <ExactField F>
WitnessReport<F> witness_test(const Matrix<F>& a, const MatSpace<F>& sp) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "witness_test needs a square anchor");
  detail::check_pair(a, sp);
  if (!sp.contains(a)) throw Error(ErrorCode::NotMember, "anchor matrix is not in the space");

  const F& f = a.field();
  const std::size_t n = a.rows();
  const Matrix<F> ap = pseudo_inverse(a);
  std::vector<Matrix<F>> shifted;
  for (const auto& g : sp.gens()) shifted.push_back(g * ap);
  const auto bap = MatSpace<F>::from_spanning(f, n, n, shifted);
  const Subspace<F> img = image(a);

  WitnessReport<F> rep;
  rep.c = n - img.dim();
  Subspace<F> w = image_of(bap, kernel(a * ap));
  for (std::size_t i = 1;; ++i) {
    rep.iterates.push_back(w);
    if (!contains(img, w)) {
      rep.stopped_at = i;
      return rep;
    }
    auto next = image_of(bap, w);
    if (next == w) break;
    if (i > n + 1) throw std::logic_error("witness_test: iteration did not stabilize");
    w = std::move(next);
  }

  rep.exists = true;
  rep.witness = sum(apply(ap, w), kernel(a));
  if (!verify_witness(sp, *rep.witness, rep.c))
    throw std::logic_error("witness_test: produced subspace fails the witness inequality");
  return rep;
}

}  // namespace wongseq
