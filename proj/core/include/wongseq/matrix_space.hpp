#pragma once

// Matrix spaces B = <B_1, ..., B_m> of rows x cols matrices. Matrices act on
// column vectors, so B(U) lives in F^rows for U <= F^cols.

#include <optional>
#include <vector>

#include "wongseq/linalg.hpp"

namespace wongseq {

template <ExactField F>
class MatSpace {
 public:
  using value_type = typename F::value_type;

  // Keeps a maximal linearly independent subset of `mats`, in input order.
  static MatSpace from_spanning(const F& field, std::size_t rows, std::size_t cols,
                                const std::vector<Matrix<F>>& mats) {
    MatSpace sp(field, rows, cols);
    IncrementalBasis<F> basis(field, rows * cols);
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const auto& m = mats[i];
      if (!(m.field() == field))
        throw Error(ErrorCode::FieldMismatch, "generator over " + m.field().spec().name());
      if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorCode::DimMismatch, "generator " + std::to_string(i) + " has wrong shape");
      if (basis.insert(m.entries())) {
        sp.gens_.push_back(m);
        sp.source_.push_back(i);
      }
    }
    return sp;
  }

  static MatSpace from_spanning(const std::vector<Matrix<F>>& mats) {
    if (mats.empty()) throw Error(ErrorCode::EmptySpace, "no generators given");
    return from_spanning(mats.front().field(), mats.front().rows(), mats.front().cols(), mats);
  }

  static MatSpace zero(const F& field, std::size_t rows, std::size_t cols) {
    return MatSpace(field, rows, cols);
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t dim() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  const std::vector<Matrix<F>>& gens() const { return gens_; }
  const Matrix<F>& gen(std::size_t i) const { return gens_.at(i); }
  // Index in the spanning list of each kept generator.
  const std::vector<std::size_t>& source_indices() const { return source_; }

  Matrix<F> combination(std::span<const value_type> coeffs) const {
    if (coeffs.size() != dim()) throw Error(ErrorCode::DimMismatch, "coefficient count vs dim");
    Matrix<F> m(field_, rows_, cols_);
    for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(coeffs[i], gens_[i]);
    return m;
  }

  // Coordinates of m in the basis, or nullopt when m is not in the space.
  std::optional<std::vector<value_type>> coordinates(const Matrix<F>& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) throw Error(ErrorCode::DimMismatch, "matrix shape");
    const std::size_t len = rows_ * cols_;
    Matrix<F> sys(field_, len, dim() + 1);
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t t = 0; t < len; ++t) sys(t, k) = gens_[k].entries()[t];
    for (std::size_t t = 0; t < len; ++t) sys(t, dim()) = m.entries()[t];
    auto [form, r, pivots] = rref(std::move(sys));
    if (r > 0 && pivots[r - 1] == dim()) return std::nullopt;
    std::vector<value_type> x(dim(), field_.zero());
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = form(i, dim());
    return x;
  }

  bool contains(const Matrix<F>& m) const { return coordinates(m).has_value(); }

  // Span of the generators as a subspace of F^(rows*cols).
  Subspace<F> flat_span() const {
    Matrix<F> m(field_, dim(), rows_ * cols_);
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t t = 0; t < rows_ * cols_; ++t) m(k, t) = gens_[k].entries()[t];
    return Subspace<F>::row_span(std::move(m));
  }

  bool same_span(const MatSpace& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && flat_span() == other.flat_span();
  }

 private:
  MatSpace(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols) {}

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix<F>> gens_;
  std::vector<std::size_t> source_;
};

template <ExactField F>
Subspace<F> image_of(const MatSpace<F>& sp, const Subspace<F>& u) {
  if (u.ambient_dim() != sp.cols()) throw Error(ErrorCode::DimMismatch, "subspace vs space domain");
  if (u.is_zero() || sp.is_zero()) return Subspace<F>::zero(sp.field(), sp.rows());
  Matrix<F> all(sp.field(), sp.dim() * u.dim(), sp.rows());
  for (std::size_t k = 0; k < sp.dim(); ++k)
    all.set_block(k * u.dim(), 0, u.basis() * sp.gen(k).transpose());
  return Subspace<F>::row_span(std::move(all));
}

template <ExactField F>
MatSpace<F> transpose_space(const MatSpace<F>& sp) {
  std::vector<Matrix<F>> t;
  for (const auto& g : sp.gens()) t.push_back(g.transpose());
  return MatSpace<F>::from_spanning(sp.field(), sp.cols(), sp.rows(), t);
}

// Largest T with B T <= W for all B, via (B^T(W^perp))^perp.
template <ExactField F>
Subspace<F> preimage_of(const MatSpace<F>& sp, const Subspace<F>& w) {
  if (w.ambient_dim() != sp.rows()) throw Error(ErrorCode::DimMismatch, "subspace vs space codomain");
  return orthogonal(image_of(transpose_space(sp), orthogonal(w)));
}

template <ExactField F>
MatSpace<F> product(const MatSpace<F>& a, const MatSpace<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "inner dimensions of product space");
  std::vector<Matrix<F>> prods;
  prods.reserve(a.dim() * b.dim());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) prods.push_back(x * y);
  return MatSpace<F>::from_spanning(a.field(), a.rows(), b.cols(), prods);
}

template <ExactField F>
MatSpace<F> identity_space(const F& field, std::size_t n) {
  return MatSpace<F>::from_spanning(field, n, n, {Matrix<F>::identity(field, n)});
}

template <ExactField F>
MatSpace<F> power(const MatSpace<F>& sp, std::size_t j) {
  if (!sp.is_square()) throw Error(ErrorCode::NotSquare, "power of a non-square space");
  if (j == 0) return identity_space(sp.field(), sp.rows());
  MatSpace<F> p = sp;
  for (std::size_t i = 1; i < j; ++i) p = product(p, sp);
  return p;
}

template <ExactField F>
MatSpace<F> commutator_space(const MatSpace<F>& sp) {
  if (!sp.is_square()) throw Error(ErrorCode::NotSquare, "commutators need square matrices");
  std::vector<Matrix<F>> cs;
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = i + 1; j < sp.dim(); ++j)
      cs.push_back(sp.gen(i) * sp.gen(j) - sp.gen(j) * sp.gen(i));
  return MatSpace<F>::from_spanning(sp.field(), sp.rows(), sp.cols(), cs);
}

// Multiplicative closure of a space containing the identity.
template <ExactField F>
MatSpace<F> generated_algebra(const MatSpace<F>& sp) {
  if (!sp.is_square()) throw Error(ErrorCode::NotSquare, "algebra of a non-square space");
  if (!sp.contains(Matrix<F>::identity(sp.field(), sp.rows())))
    throw Error(ErrorCode::IdentityMissing, "generated_algebra expects the identity in the space");
  MatSpace<F> d = sp;
  while (true) {
    std::vector<Matrix<F>> mats = d.gens();
    for (const auto& x : d.gens())
      for (const auto& y : sp.gens()) mats.push_back(x * y);
    MatSpace<F> next = MatSpace<F>::from_spanning(sp.field(), sp.rows(), sp.cols(), mats);
    if (next.dim() == d.dim()) return d;
    d = std::move(next);
  }
}

// True when every generator of b lies in a.
template <ExactField F>
bool contains(const MatSpace<F>& a, const MatSpace<F>& b) {
  for (const auto& g : b.gens())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace wongseq
