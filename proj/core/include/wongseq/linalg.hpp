#pragma once

// Exact dense linear algebra: reduced row echelon form, kernels, images,
// canonical subspaces and their lattice operations, pseudo-inverses.
//
// Subspaces are stored as RREF row bases, so two subspaces are equal exactly
// when their stored bases are entrywise equal. Over Q elimination is
// fraction-free on primitive integer rows (gcd-normalized after every pivot
// step); the result is rescaled to RREF at the end.

#include <algorithm>
#include <optional>
#include <vector>

#include "wongseq/matrix.hpp"

namespace wongseq {

namespace detail {
std::size_t rref_rational(Matrix<RationalField>& m, std::vector<std::size_t>& pivots);
// Scales a rational vector to a primitive integer vector (no-op on zero).
void make_primitive(std::span<mpq_class> row);
}  // namespace detail

// In-place RREF; returns the rank and fills the pivot columns.
template <ExactField F>
std::size_t rref_in_place(Matrix<F>& m, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if constexpr (is_rational_field_v<F>) {
    return detail::rref_rational(m, pivots);
  } else {
    const F& f = m.field();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
      std::size_t r = rank;
      while (r < m.rows() && f.is_zero(m(r, c))) ++r;
      if (r == m.rows()) continue;
      if (r != rank)
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(rank, j));
      const auto inv = f.inv(m(rank, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = f.mul(inv, m(rank, j));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == rank || f.is_zero(m(i, c))) continue;
        const auto factor = f.neg(m(i, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.mul_add(m(i, j), factor, m(rank, j));
      }
      pivots.push_back(c);
      ++rank;
    }
    return rank;
  }
}

template <ExactField F>
struct RrefResult {
  Matrix<F> form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  const std::size_t r = rref_in_place(m, pivots);
  return {std::move(m), r, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> copy = m;
  std::vector<std::size_t> pivots;
  return rref_in_place(copy, pivots);
}

template <ExactField F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  static Subspace zero(const F& field, std::size_t n) { return Subspace(Matrix<F>(field, 0, n), {}); }

  static Subspace full(const F& field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, n), std::move(piv));
  }

  // Span of the rows of `rows`.
  static Subspace row_span(Matrix<F> rows) {
    std::vector<std::size_t> piv;
    const std::size_t r = rref_in_place(rows, piv);
    return Subspace(rows.block(0, 0, r, rows.cols()), std::move(piv));
  }

  static Subspace span(const F& field, std::size_t n,
                       const std::vector<std::vector<value_type>>& vectors) {
    Matrix<F> m(field, vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != n) throw Error(ErrorCode::DimMismatch, "vector length vs ambient");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
    }
    return row_span(std::move(m));
  }

  // Coordinate subspace spanned by e_i for i in `coords` (zero-based).
  static Subspace coordinate(const F& field, std::size_t n, const std::vector<std::size_t>& coords) {
    std::vector<std::vector<value_type>> vs;
    for (auto c : coords) {
      std::vector<value_type> v(n, field.zero());
      v.at(c) = field.one();
      vs.push_back(std::move(v));
    }
    return span(field, n, vs);
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::span<const value_type> vector(std::size_t i) const { return basis_.row(i); }

  std::vector<std::vector<value_type>> vectors() const {
    std::vector<std::vector<value_type>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(vector(i).begin(), vector(i).end());
    return out;
  }

  bool contains(std::span<const value_type> v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorCode::DimMismatch, "vector length vs ambient");
    const F& f = field();
    std::vector<value_type> w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto c = w[pivots_[i]];
      if (f.is_zero(c)) continue;
      const auto factor = f.neg(c);
      for (std::size_t j = pivots_[i]; j < w.size(); ++j) w[j] = f.mul_add(w[j], factor, basis_(i, j));
    }
    return std::all_of(w.begin(), w.end(), [&](const value_type& x) { return f.is_zero(x); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  std::string to_string() const { return "<" + basis_.to_string() + ">"; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {
template <ExactField F>
void check_ambient(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimMismatch, "subspaces live in different ambient spaces");
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::FieldMismatch, a.field().spec().name() + " vs " + b.field().spec().name());
}

template <ExactField F>
Matrix<F> stack(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}
}  // namespace detail

// Null space {x : m x = 0} inside F^cols.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto [form, r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> vs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = f.neg(form(i, free));
    vs.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols(), vs);
}

// Column span inside F^rows.
template <ExactField F>
Subspace<F> image(const Matrix<F>& m) {
  return Subspace<F>::row_span(m.transpose());
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& s) {
  detail::check_ambient(u, s);
  return Subspace<F>::row_span(detail::stack(u.basis(), s.basis()));
}

// Orthogonal complement for the standard bilinear form.
template <ExactField F>
Subspace<F> orthogonal(const Subspace<F>& u) {
  if (u.is_zero()) return Subspace<F>::full(u.field(), u.ambient_dim());
  return kernel(u.basis());
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& s) {
  detail::check_ambient(u, s);
  return orthogonal(sum(orthogonal(u), orthogonal(s)));
}

// s is a subset of u.
template <ExactField F>
bool contains(const Subspace<F>& u, const Subspace<F>& s) {
  detail::check_ambient(u, s);
  if (s.dim() > u.dim()) return false;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!u.contains(s.vector(i))) return false;
  return true;
}

// Coordinate complement spanned by the non-pivot unit vectors.
template <ExactField F>
Subspace<F> complement(const Subspace<F>& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> coords;
  for (std::size_t j = 0; j < u.ambient_dim(); ++j)
    if (!is_pivot[j]) coords.push_back(j);
  return Subspace<F>::coordinate(u.field(), u.ambient_dim(), coords);
}

template <ExactField F>
struct QuotientCoords {
  Matrix<F> proj;     // (n - dim U) x n, surjective, kernel exactly U
  Matrix<F> section;  // n x (n - dim U), proj * section = identity
  std::size_t dim;
};

// Coordinates on F^n / U: projection along U onto the coordinate complement.
template <ExactField F>
QuotientCoords<F> quotient_coords(const Subspace<F>& u) {
  const F& f = u.field();
  const std::size_t n = u.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<F> proj(f, free.size(), n);
  Matrix<F> section(f, n, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    proj(t, free[t]) = f.one();
    section(free[t], t) = f.one();
    for (std::size_t i = 0; i < u.dim(); ++i) proj(t, u.pivots()[i]) = f.neg(u.basis()(i, free[t]));
  }
  return {std::move(proj), std::move(section), free.size()};
}

// Image of a subspace of F^cols under a single matrix.
template <ExactField F>
Subspace<F> apply(const Matrix<F>& m, const Subspace<F>& u) {
  if (u.ambient_dim() != m.cols()) throw Error(ErrorCode::DimMismatch, "subspace vs matrix domain");
  if (u.is_zero()) return Subspace<F>::zero(m.field(), m.rows());
  return Subspace<F>::row_span(u.basis() * m.transpose());
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<F>::identity(m.field(), n));
  std::vector<std::size_t> pivots;
  rref_in_place(aug, pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <ExactField F>
typename F::value_type determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const F& f = m.field();
  Matrix<F> a = m;
  auto det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && f.is_zero(a(r, c))) ++r;
    if (r == n) return f.zero();
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const auto inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(a(i, c))) continue;
      const auto factor = f.neg(f.mul(a(i, c), inv));
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.mul_add(a(i, j), factor, a(c, j));
    }
  }
  return det;
}

// Nonsingular A' with A A' v = v on im(A): A' inverts A from im(A) onto the
// coordinate complement of ker(A) and sends the coordinate complement of
// im(A) onto ker(A), pairing basis vectors in order.
template <ExactField F>
Matrix<F> pseudo_inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "pseudo-inverse needs a square matrix");
  const F& f = a.field();
  const std::size_t n = a.rows();
  const Subspace<F> ker = kernel(a);
  const Subspace<F> dom = complement(ker);
  const Subspace<F> img = image(a);
  const Subspace<F> cod = complement(img);

  // Columns of `source` form a basis of F^n; A' maps them to the columns of `target`.
  Matrix<F> source(f, n, n);
  Matrix<F> target(f, n, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < dom.dim(); ++i, ++col) {
    const auto v = dom.vector(i);
    const auto av = a.apply(v);
    for (std::size_t r = 0; r < n; ++r) {
      source(r, col) = av[r];
      target(r, col) = v[r];
    }
  }
  for (std::size_t i = 0; i < cod.dim(); ++i, ++col) {
    for (std::size_t r = 0; r < n; ++r) {
      source(r, col) = cod.vector(i)[r];
      target(r, col) = ker.vector(i)[r];
    }
  }
  auto inv = inverse(source);
  if (!inv) throw std::logic_error("pseudo_inverse: complement construction is singular");
  return target * *inv;
}

// Greedy selection of linearly independent vectors, in insertion order.
template <ExactField F>
class IncrementalBasis {
 public:
  using value_type = typename F::value_type;

  IncrementalBasis(F field, std::size_t length) : field_(std::move(field)), length_(length) {}

  // Returns true (and keeps v) if v is independent of the vectors kept so far.
  bool insert(std::span<const value_type> v) {
    std::vector<value_type> w(v.begin(), v.end());
    reduce(w);
    std::size_t p = 0;
    while (p < length_ && field_.is_zero(w[p])) ++p;
    if (p == length_) return false;
    if constexpr (is_rational_field_v<F>) {
      detail::make_primitive(w);
    } else {
      const auto inv = field_.inv(w[p]);
      for (auto& x : w) x = field_.mul(inv, x);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  bool is_dependent(std::span<const value_type> v) const {
    std::vector<value_type> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(), [&](const value_type& x) { return field_.is_zero(x); });
  }

  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(std::vector<value_type>& w) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (field_.is_zero(w[p])) continue;
      if constexpr (is_rational_field_v<F>) {
        const mpq_class a = rows_[i][p], b = w[p];
        for (std::size_t j = 0; j < length_; ++j) w[j] = a * w[j] - b * rows_[i][j];
        detail::make_primitive(w);
      } else {
        const auto factor = field_.neg(w[p]);
        for (std::size_t j = 0; j < length_; ++j) w[j] = field_.mul_add(w[j], factor, rows_[i][j]);
      }
    }
  }

  F field_;
  std::size_t length_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wongseq
