#pragma once

// Power Overflow: given a square space D and subspaces U, U', find D in the
// space and l with D^l(U) not inside U'.

#include <optional>
#include <stdexcept>
#include <vector>

#include "wongseq/matrix_space.hpp"

namespace wongseq {

template <ExactField F>
struct PoInstance {
  MatSpace<F> d;
  Subspace<F> u;
  Subspace<F> u_prime;
};

template <ExactField F>
struct PoAnswer {
  bool found = false;
  std::optional<Matrix<F>> d;
  std::size_t ell = 0;
  std::vector<typename F::value_type> coefficients;  // expansion of d in inst.d.gens()
};

template <ExactField F>
struct EllSearch {
  std::optional<std::size_t> ell;
  std::vector<MatSpace<F>> powers;  // powers[j] spans D^j, j = 0..ell
};

namespace detail {
template <ExactField F>
void check_po(const PoInstance<F>& inst) {
  const std::size_t n = inst.d.rows();
  if (!inst.d.is_square()) throw Error(ErrorCode::NotSquare, "power overflow needs a square space");
  if (inst.u.ambient_dim() != n || inst.u_prime.ambient_dim() != n)
    throw Error(ErrorCode::DimMismatch, "U and U' must live in F^n");
}

template <ExactField F>
Matrix<F> power_of(const Matrix<F>& m, std::size_t e) {
  Matrix<F> r = Matrix<F>::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}
}  // namespace detail

template <ExactField F>
EllSearch<F> find_ell(const PoInstance<F>& inst) {
  detail::check_po(inst);
  const std::size_t n = inst.d.rows();
  EllSearch<F> out;
  out.powers.push_back(identity_space(inst.d.field(), n));
  MatSpace<F> t = inst.d;
  for (std::size_t j = 1; j <= n; ++j) {
    out.powers.push_back(t);
    if (!contains(inst.u_prime, image_of(t, inst.u))) {
      out.ell = j;
      return out;
    }
    if (t.is_zero()) break;
    t = product(t, inst.d);
  }
  out.powers.erase(out.powers.begin() + 1, out.powers.end());
  return out;
}

// H_i = {X in D : D^(l-j) X D^(j-1) U <= U' for all j != i}, i = 1..l.
template <ExactField F>
std::vector<MatSpace<F>> helpful_subspaces(const PoInstance<F>& inst, std::size_t ell,
                                           const std::vector<MatSpace<F>>& powers) {
  using V = typename F::value_type;
  const F& f = inst.d.field();
  const std::size_t n = inst.d.rows();
  const std::size_t m = inst.d.dim();
  if (powers.size() <= ell) throw std::invalid_argument("helpful_subspaces: missing powers of D");
  const Subspace<F> perp = orthogonal(inst.u_prime);

  // rows[j] holds the constraints contributed by position j (1-based).
  std::vector<std::vector<std::vector<V>>> rows(ell + 1);
  for (std::size_t j = 1; j <= ell; ++j) {
    for (const auto& zr : powers[j - 1].gens()) {
      for (std::size_t ui = 0; ui < inst.u.dim(); ++ui) {
        const auto w = zr.apply(inst.u.vector(ui));
        std::vector<std::vector<V>> dw;
        for (const auto& dk : inst.d.gens()) dw.push_back(dk.apply(w));
        for (const auto& zl : powers[ell - j].gens()) {
          std::vector<std::vector<V>> zdw;
          for (const auto& x : dw) zdw.push_back(zl.apply(x));
          for (std::size_t vi = 0; vi < perp.dim(); ++vi) {
            const auto v = perp.vector(vi);
            std::vector<V> eq(m, f.zero());
            for (std::size_t k = 0; k < m; ++k)
              for (std::size_t t = 0; t < n; ++t) eq[k] = f.mul_add(eq[k], zdw[k][t], v[t]);
            rows[j].push_back(std::move(eq));
          }
        }
      }
    }
  }

  std::vector<MatSpace<F>> hs;
  for (std::size_t i = 1; i <= ell; ++i) {
    std::vector<std::vector<V>> sys;
    for (std::size_t j = 1; j <= ell; ++j)
      if (j != i) sys.insert(sys.end(), rows[j].begin(), rows[j].end());
    Subspace<F> sol = sys.empty() ? Subspace<F>::full(f, m) : kernel(Matrix<F>::from_rows(f, sys));
    std::vector<Matrix<F>> mats;
    for (std::size_t s = 0; s < sol.dim(); ++s) mats.push_back(inst.d.combination(sol.vector(s)));
    hs.push_back(MatSpace<F>::from_spanning(f, n, n, mats));
  }
  return hs;
}

// Greedy search X_l, ..., X_1 through the bases of H_l, ..., H_1; D = sum X_i.
template <ExactField F>
PoAnswer<F> solve_po(const PoInstance<F>& inst) {
  const F& f = inst.d.field();
  const std::size_t n = inst.d.rows();
  PoAnswer<F> ans;
  const auto search = find_ell(inst);
  if (!search.ell) return ans;
  const std::size_t ell = *search.ell;
  const auto hs = helpful_subspaces(inst, ell, search.powers);

  // reach[i] = H_i ... H_1 (U)
  std::vector<Subspace<F>> reach{inst.u};
  for (std::size_t i = 0; i + 1 < ell; ++i) reach.push_back(image_of(hs[i], reach.back()));

  Matrix<F> left = Matrix<F>::identity(f, n);
  std::vector<Matrix<F>> chosen(ell, Matrix<F>(f, n, n));
  for (std::size_t i = ell; i-- > 0;) {
    bool ok = false;
    for (const auto& z : hs[i].gens()) {
      Matrix<F> cand = left * z;
      if (!contains(inst.u_prime, apply(cand, reach[i]))) {
        left = std::move(cand);
        chosen[i] = z;
        ok = true;
        break;
      }
    }
    if (!ok) return ans;
  }

  Matrix<F> d(f, n, n);
  for (const auto& x : chosen) d = d + x;
  if (contains(inst.u_prime, apply(detail::power_of(d, ell), inst.u)))
    throw std::logic_error("solve_po: greedy product escapes U' but D^l does not");
  auto coeffs = inst.d.coordinates(d);
  if (!coeffs) throw std::logic_error("solve_po: answer is outside the space");
  ans.found = true;
  ans.d = std::move(d);
  ans.ell = ell;
  ans.coefficients = std::move(*coeffs);
  return ans;
}

}  // namespace wongseq
