#include "wongseq/linalg.hpp"

namespace wongseq::detail {

namespace {

using IntRow = std::vector<mpz_class>;

void primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow clear_denominators(std::span<const mpq_class> row) {
  mpz_class l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = row[j].get_num() * (l / row[j].get_den());
  }
  primitive(out);
  return out;
}

}  // namespace

void make_primitive(std::span<mpq_class> row) {
  IntRow ints = clear_denominators(row);
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = ints[j];
}

std::size_t rref_rational(Matrix<RationalField>& m, std::vector<std::size_t>& pivots) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntRow> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(clear_denominators(m.row(i)));

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && sgn(a[r][c]) == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    const IntRow& piv = a[rank];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(a[i][c]) == 0) continue;
      const mpz_class x = piv[c], y = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = x * a[i][j] - y * piv[j];
      primitive(a[i]);
    }
    pivots.push_back(c);
    ++rank;
  }

  for (std::size_t i = 0; i < rows; ++i) {
    if (i >= rank) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = 0;
      continue;
    }
    const mpz_class d = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class v(a[i][j], d);
      v.canonicalize();
      m(i, j) = std::move(v);
    }
  }
  return rank;
}

}  // namespace wongseq::detail
