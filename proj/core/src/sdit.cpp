#include "wongseq/sdit.hpp"

namespace wongseq {

mpz_class sdit_prime_bound(std::size_t n, std::size_t m, const mpz_class& b) {
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), nn.get_mpz_t());
  if (root * root != nn) ++root;
  mpz_class base = mpz_class(static_cast<unsigned long>(n + 1)) * static_cast<unsigned long>(m) * b;
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), n);
  return root * p;
}

RationalSditReport rational_sdit(const std::vector<Matrix<RationalField>>& gens,
                                 std::optional<std::size_t> prime_budget) {
  if (gens.empty()) throw Error(ErrorCode::EmptySpace, "no generators given");
  const std::size_t n = gens.front().rows();
  const std::size_t m = gens.size();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::NotSquare, "generators must be n x n");

  RationalSditReport rep;
  std::vector<std::vector<mpz_class>> ints(m, std::vector<mpz_class>(n * n));
  mpz_class b = 1;
  for (std::size_t k = 0; k < m; ++k) {
    mpz_class l = 1;
    for (const auto& x : gens[k].entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    rep.scales.push_back(l);
    for (std::size_t t = 0; t < n * n; ++t) {
      const auto& x = gens[k].entries()[t];
      ints[k][t] = x.get_num() * (l / x.get_den());
      if (abs(ints[k][t]) > b) b = abs(ints[k][t]);
    }
  }
  rep.bound_used = sdit_prime_bound(n, m, b);

  RationalField q;
  mpz_class product = 1;
  mpz_class p = static_cast<unsigned long>(n);
  while (product <= rep.bound_used) {
    if (prime_budget && rep.primes_tried.size() >= *prime_budget) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (!p.fits_uint_p() || p.get_ui() >= (1ul << 31))
      throw Error(ErrorCode::Unsupported, "prime range exhausted before reaching the bound");
    const auto pi = static_cast<std::uint32_t>(p.get_ui());
    rep.primes_tried.push_back(pi);
    product *= p;

    const auto f = FiniteField::prime(pi);
    std::vector<Matrix<FiniteField>> reduced;
    for (std::size_t k = 0; k < m; ++k) {
      Matrix<FiniteField> r(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = f.from_mpz(ints[k][i * n + j]);
      reduced.push_back(std::move(r));
    }
    const auto out = tri_algo(f, n, reduced);
    if (out.kind != TriKind::Nonsingular) continue;

    Matrix<RationalField> s(q, n, n);
    std::vector<mpz_class> coeffs;
    for (std::size_t k = 0; k < m; ++k) {
      coeffs.emplace_back(static_cast<unsigned long>(out.coefficients[k]));
      for (std::size_t t = 0; t < n * n; ++t)
        s(t / n, t % n) += mpq_class(coeffs.back() * ints[k][t]);
    }
    if (sgn(determinant(s)) == 0) continue;
    rep.nonsingular = true;
    rep.prime_used = pi;
    rep.integer_coefficients = coeffs;
    for (std::size_t k = 0; k < m; ++k) rep.coefficients.emplace_back(coeffs[k] * rep.scales[k]);
    return rep;
  }
  return rep;
}

}  // namespace wongseq
