#include <doctest.h>

#include "support.hpp"
#include "wongseq/gallery.hpp"
#include "wongseq/oracles.hpp"
#include "wongseq/sdit.hpp"

using namespace wongseq;
using namespace testing_support;

namespace {

const FiniteField f7 = FiniteField::prime(7);

template <ExactField F>
Matrix<F> combine(const F& f, std::size_t n, const std::vector<Matrix<F>>& list,
                  const std::vector<typename F::value_type>& c) {
  Matrix<F> s(f, n, n);
  for (std::size_t i = 0; i < list.size(); ++i) s.add_scaled(c[i], list[i]);
  return s;
}

}  // namespace

TEST_CASE("tri_algo small examples") {
  auto out = tri_algo(f7, 2, {E(f7, 2, 1, 2), E(f7, 2, 1, 1)});
  CHECK(out.kind == TriKind::Witness);
  REQUIRE(out.witness);
  CHECK(out.witness->is_full());

  std::vector<Matrix<FiniteField>> list{Matrix<FiniteField>::identity(f7, 2) + E(f7, 2, 1, 2), E(f7, 2, 1, 2)};
  out = tri_algo(f7, 2, list);
  CHECK(out.kind == TriKind::Nonsingular);
  CHECK(rank(combine(f7, 2, list, out.coefficients)) == 2);

  out = tri_algo(f7, 1, {mat(f7, {{0}}), mat(f7, {{3}})});
  CHECK(out.kind == TriKind::Nonsingular);
  CHECK(out.coefficients == vec(f7, {0, 1}));

  out = tri_algo(f7, 1, {mat(f7, {{0}})});
  CHECK(out.kind == TriKind::Witness);

  out = tri_algo(f7, 0, {Matrix<FiniteField>(f7, 0, 0)});
  CHECK(out.kind == TriKind::Nonsingular);
}

TEST_CASE("tri_algo with a common kernel") {
  auto out = tri_algo(f7, 3, {E(f7, 3, 1, 2), E(f7, 3, 2, 2)});
  CHECK(out.kind == TriKind::Witness);
  CHECK(*out.witness == span(f7, 3, {{1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("tri_algo on sk3 fails") {
  CHECK(tri_algo(gallery::sk3(FiniteField::prime(5))).kind == TriKind::Fail);
  CHECK(tri_algo(gallery::sk3(f7)).kind == TriKind::Fail);
  CHECK(tri_algo(gallery::sk3(RationalField{})).kind == TriKind::Fail);
}

TEST_CASE("tri_algo errors") {
  auto f2 = FiniteField::prime(2);
  try {
    tri_algo(f2, 2, {E(f2, 2, 1, 1)});
    FAIL("GF(2) accepted for n = 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooSmall);
  }
  try {
    tri_algo(f7, 2, {});
    FAIL("empty list accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySpace);
  }
  try {
    tri_algo(f7, 2, {E(FiniteField::prime(5), 2, 1, 1)});
    FAIL("field mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("tri_algo on conjugated triangular spaces") {
  std::mt19937_64 rng(71);
  auto f11 = FiniteField::prime(11);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 3;
    std::optional<std::size_t> slot;
    if (it % 3 == 0) slot = rng() % n;
    auto inst = gallery::random_triangular(f11, n, m, rng, slot);
    auto out = tri_algo(f11, n, inst.gens);
    REQUIRE(out.kind != TriKind::Fail);
    auto sp = MatSpace<FiniteField>::from_spanning(f11, n, n, inst.gens);
    const bool has_nonsingular = brute_max_rank(sp).rank == n;
    CHECK((out.kind == TriKind::Nonsingular) == has_nonsingular);
    if (slot) CHECK(out.kind == TriKind::Witness);
    if (out.kind == TriKind::Nonsingular)
      CHECK(rank(combine(f11, n, inst.gens, out.coefficients)) == n);
    else
      CHECK(verify_witness(sp, *out.witness, 1));
  }
}

TEST_CASE("tri_algo on a 4x4 instance over GF(11)") {
  std::mt19937_64 rng(73);
  auto f11 = FiniteField::prime(11);
  auto inst = gallery::random_triangular(f11, 4, 3, rng);
  auto out = tri_algo(f11, 4, inst.gens);
  auto sp = MatSpace<FiniteField>::from_spanning(f11, 4, 4, inst.gens);
  CHECK((out.kind == TriKind::Nonsingular) == (brute_max_rank(sp).rank == 4));
}

TEST_CASE("triangularizability test") {
  auto i2 = Matrix<FiniteField>::identity(f7, 2);
  CHECK(is_triangularizable_with_nonsingular(space<FiniteField>({i2, E(f7, 2, 1, 2)}), i2));
  CHECK_FALSE(is_triangularizable_with_nonsingular(space<FiniteField>({i2, E(f7, 2, 1, 2), E(f7, 2, 2, 1)}), i2));
  CHECK_FALSE(is_triangularizable_with_nonsingular(gallery::sk3(f7), Matrix<FiniteField>::identity(f7, 3)));

  CHECK(is_triangularizable_with_nonsingular(space<FiniteField>({i2, mat(f7, {{1, 0}, {0, 2}})}), i2));

  RationalField q;
  auto iq = Matrix<RationalField>::identity(q, 2);
  // rotation generator: triangularizable only after adjoining i
  CHECK(is_triangularizable_with_nonsingular(space<RationalField>({iq, mat(q, {{0, 1}, {-1, 0}})}), iq));

  try {
    is_triangularizable_with_nonsingular(space<FiniteField>({i2}), E(f7, 2, 1, 1));
    FAIL("singular pivot accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularS);
  }

  std::mt19937_64 rng(79);
  auto f5 = FiniteField::prime(5);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 2 + rng() % 2;
    auto inst = gallery::random_triangular(f5, n, 2, rng);
    auto sp = MatSpace<FiniteField>::from_spanning(f5, n, n, inst.gens);
    auto best = brute_max_rank(sp);
    if (best.rank < n) continue;
    CHECK(is_triangularizable_with_nonsingular(sp, sp.combination(best.coefficients)));
  }
}

TEST_CASE("prime bound") {
  CHECK(sdit_prime_bound(2, 2, 1) == 2 * 36);
  CHECK(sdit_prime_bound(3, 1, 2) == 6 * 512);
  CHECK(sdit_prime_bound(1, 1, 1) == 2);
}

TEST_CASE("rational_sdit examples") {
  RationalField q;
  auto i2 = Matrix<RationalField>::identity(q, 2);
  auto rep = rational_sdit({i2 + E(q, 2, 1, 2), E(q, 2, 1, 2)});
  CHECK(rep.nonsingular);
  REQUIRE(rep.prime_used);
  CHECK(*rep.prime_used == 3);
  CHECK(rep.primes_tried == std::vector<std::uint32_t>{3});

  rep = rational_sdit({E(q, 2, 1, 1), E(q, 2, 1, 2)});
  CHECK_FALSE(rep.nonsingular);
  CHECK_FALSE(rep.prime_used);
  mpz_class product = 1;
  for (auto p : rep.primes_tried) product *= p;
  CHECK(product > rep.bound_used);

  rep = rational_sdit({E(q, 2, 1, 1), E(q, 2, 1, 2)}, 2);
  CHECK(rep.primes_tried.size() == 2);
}

TEST_CASE("rational_sdit clears denominators") {
  RationalField q;
  std::vector<Matrix<RationalField>> gens{mat(q, {{0, 0}, {0, 0}}), mat(q, {{0, 0}, {0, 0}})};
  gens[0](0, 0) = mpq_class(1, 3);
  gens[0](0, 1) = mpq_class(5, 2);
  gens[1](1, 1) = mpq_class(-7, 4);
  auto rep = rational_sdit(gens);
  REQUIRE(rep.nonsingular);
  CHECK(rep.scales == std::vector<mpz_class>{6, 4});
  Matrix<RationalField> s(q, 2, 2);
  for (std::size_t k = 0; k < 2; ++k) s.add_scaled(rep.coefficients[k], gens[k]);
  CHECK(sgn(determinant(s)) != 0);
}

TEST_CASE("rational_sdit on random conjugated triangular integer spaces") {
  RationalField q;
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int it = 0; it < 15; ++it) {
    const std::size_t n = 2 + rng() % 2, m = 1 + rng() % 3;
    Matrix<RationalField> p(q, n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
    } while (sgn(determinant(p)) == 0);
    const auto pinv = *inverse(p);
    std::vector<Matrix<RationalField>> gens;
    std::vector<bool> covered(n, false);
    for (std::size_t k = 0; k < m; ++k) {
      Matrix<RationalField> t(q, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) t(i, j) = d(rng);
      for (std::size_t i = 0; i < n; ++i) covered[i] = covered[i] || t(i, i) != 0;
      gens.push_back(p * t * pinv);
    }
    auto rep = rational_sdit(gens);
    const bool expected = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    CHECK(rep.nonsingular == expected);
    if (!rep.nonsingular) continue;
    Matrix<RationalField> s(q, n, n);
    for (std::size_t k = 0; k < m; ++k) s.add_scaled(rep.coefficients[k], gens[k]);
    CHECK(sgn(determinant(s)) != 0);
  }
}
