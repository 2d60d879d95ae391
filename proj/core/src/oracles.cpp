#include "wongseq/oracles.hpp"

#include <algorithm>

namespace wongseq {

namespace {

using V = FiniteField::value_type;

// Rank of `count` row vectors of length `len` stored contiguously; destroys buf.
std::size_t packed_rank(const FiniteField& f, V* buf, std::size_t count, std::size_t len) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < len && r < count; ++c) {
    std::size_t piv = r;
    while (piv < count && buf[piv * len + c] == 0) ++piv;
    if (piv == count) continue;
    if (piv != r) std::swap_ranges(buf + piv * len, buf + piv * len + len, buf + r * len);
    V* prow = buf + r * len;
    const V inv = f.inv(prow[c]);
    for (std::size_t i = r + 1; i < count; ++i) {
      V* row = buf + i * len;
      if (row[c] == 0) continue;
      const V factor = f.neg(f.mul(row[c], inv));
      for (std::size_t j = c; j < len; ++j) row[j] = f.mul_add(row[j], factor, prow[j]);
    }
    ++r;
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t q, std::size_t m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > budget / q) return budget + 1;
    total *= q;
  }
  return total;
}

}  // namespace

std::uint64_t subspace_count(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  // Gaussian binomials via [n, k] = [n-1, k-1] + q^k [n-1, k], with saturation.
  std::vector<mpz_class> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1);
    mpz_class qk = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      mpz_class v = 0;
      if (k >= 1) v += row[k - 1];
      if (k < i) v += qk * row[k];
      next[k] = v;
      qk *= static_cast<unsigned long>(q);
    }
    row = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& x : row) total += x;
  if (total > mpz_class(static_cast<unsigned long>(cap))) return cap + 1;
  return total.get_ui();
}

MaxRankResult brute_max_rank(const MatSpace<FiniteField>& sp, std::uint64_t budget) {
  const FiniteField& f = sp.field();
  const std::size_t m = sp.dim();
  const std::uint64_t q = f.order();
  const std::uint64_t total = checked_pow(q, m, budget);
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "|F|^dim exceeds the element budget of " + std::to_string(budget));

  const std::size_t rows = sp.rows(), cols = sp.cols(), len = rows * cols;
  const std::size_t cap = std::min(rows, cols);
  MaxRankResult best;
  best.coefficients.assign(m, 0);
  std::vector<std::uint64_t> idx(m, 0);
  std::vector<V> acc(len), buf(len);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      const V c = f.element(idx[k]);
      if (c == 0) continue;
      const auto e = sp.gen(k).entries();
      for (std::size_t s = 0; s < len; ++s) acc[s] = f.mul_add(acc[s], c, e[s]);
    }
    buf = acc;
    const std::size_t r = packed_rank(f, buf.data(), rows, cols);
    ++best.enumerated;
    if (t == 0 || r > best.rank) {
      best.rank = r;
      for (std::size_t k = 0; k < m; ++k) best.coefficients[k] = f.element(idx[k]);
    }
    if (r == cap) break;
    for (std::size_t k = m; k-- > 0;) {
      if (++idx[k] < q) break;
      idx[k] = 0;
    }
  }
  return best;
}

DiscResult brute_disc(const MatSpace<FiniteField>& sp, std::uint64_t budget) {
  const FiniteField& f = sp.field();
  const std::uint64_t q = f.order();
  const std::size_t n = sp.cols(), rows = sp.rows(), m = sp.dim();
  if (subspace_count(q, n, budget) > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "subspace count of F^" + std::to_string(n) + " exceeds the budget of " +
                    std::to_string(budget));

  // images[k][j] = B_k e_j
  std::vector<V> images(m * n * rows);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < rows; ++i) images[(k * n + j) * rows + i] = sp.gen(k)(i, j);

  DiscResult best{0, Subspace<FiniteField>::zero(f, n), 1};
  std::vector<V> basis, buf;
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    while (true) {
      // free slots: (row i, column j) with j > piv[i] and j not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      {
        std::vector<bool> is_piv(n, false);
        for (auto p : piv) is_piv[p] = true;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = piv[i] + 1; j < n; ++j)
            if (!is_piv[j]) slots.emplace_back(i, j);
      }
      std::vector<std::uint64_t> idx(slots.size(), 0);
      basis.assign(d * n, 0);
      for (std::size_t i = 0; i < d; ++i) basis[i * n + piv[i]] = 1;
      buf.resize(m * d * rows);
      while (true) {
        for (std::size_t s = 0; s < slots.size(); ++s)
          basis[slots[s].first * n + slots[s].second] = f.element(idx[s]);
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t i = 0; i < d; ++i) {
            V* out = buf.data() + (k * d + i) * rows;
            std::fill(out, out + rows, 0);
            for (std::size_t j = piv[i]; j < n; ++j) {
              const V c = basis[i * n + j];
              if (c == 0) continue;
              const V* col = images.data() + (k * n + j) * rows;
              for (std::size_t t = 0; t < rows; ++t) out[t] = f.mul_add(out[t], c, col[t]);
            }
          }
        }
        const std::size_t img = packed_rank(f, buf.data(), m * d, rows);
        ++best.enumerated;
        if (d > img && d - img > best.disc) {
          best.disc = d - img;
          Matrix<FiniteField> b(f, d, n);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = basis[i * n + j];
          best.witness = Subspace<FiniteField>::row_span(std::move(b));
        }
        std::size_t s = slots.size();
        while (s-- > 0) {
          if (++idx[s] < q) break;
          idx[s] = 0;
        }
        if (s == static_cast<std::size_t>(-1)) break;
      }
      // next pivot pattern in lex order
      std::size_t i = d;
      while (i-- > 0 && piv[i] == n - d + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++piv[i];
      for (std::size_t t = i + 1; t < d; ++t) piv[t] = piv[t - 1] + 1;
    }
  }
  return best;
}

OracleReport oracle_report(const MatSpace<FiniteField>& sp, std::uint64_t budget) {
  const auto mr = brute_max_rank(sp, budget);
  const auto dr = brute_disc(sp, budget);
  OracleReport rep{mr.rank, dr.disc, sp.cols() - mr.rank, mr.coefficients, dr.witness,
                   mr.enumerated, dr.enumerated, false};
  rep.is_compression = rep.disc == rep.cork;
  if (rep.disc + rep.max_rank > sp.cols())
    throw std::logic_error("oracle: discrepancy exceeds the corank");
  return rep;
}

bool is_compression(const MatSpace<FiniteField>& sp, std::uint64_t budget) {
  return oracle_report(sp, budget).is_compression;
}

}  // namespace wongseq
