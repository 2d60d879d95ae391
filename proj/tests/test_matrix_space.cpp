#include <doctest.h>

#include "support.hpp"

using namespace wongseq;
using namespace testing_support;

namespace {

const FiniteField f7 = FiniteField::prime(7);

MatSpace<FiniteField> sk3(const FiniteField& f) {
  return space<FiniteField>({mat(f, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}),
                             mat(f, {{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}),
                             mat(f, {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}})});
}

Matrix<FiniteField> jordan3(const FiniteField& f) { return mat(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}); }

}  // namespace

TEST_CASE("from_spanning selects an independent subset") {
  auto sp = space<FiniteField>({E(f7, 2, 1, 1), E(f7, 2, 1, 1).scaled(2), E(f7, 2, 2, 2)});
  CHECK(sp.dim() == 2);
  CHECK(sp.gen(0) == E(f7, 2, 1, 1));
  CHECK(sp.gen(1) == E(f7, 2, 2, 2));
  CHECK(sp.source_indices() == std::vector<std::size_t>{0, 2});

  CHECK(space<FiniteField>({Matrix<FiniteField>(f7, 2, 2)}).dim() == 0);
  auto sym = E(f7, 2, 1, 2) + E(f7, 2, 2, 1);
  CHECK(space<FiniteField>({sym, E(f7, 2, 1, 2), E(f7, 2, 2, 1)}).dim() == 2);
  try {
    space<FiniteField>({E(f7, 2, 1, 1), Matrix<FiniteField>(f7, 2, 3)});
    FAIL("mixed shapes accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimMismatch);
  }
}

TEST_CASE("coordinates and membership") {
  auto sp = space<FiniteField>({E(f7, 2, 1, 1), E(f7, 2, 1, 2)});
  auto m = E(f7, 2, 1, 1).scaled(3) + E(f7, 2, 1, 2).scaled(5);
  auto c = sp.coordinates(m);
  REQUIRE(c);
  CHECK(*c == vec(f7, {3, 5}));
  CHECK(sp.combination(*c) == m);
  CHECK_FALSE(sp.contains(E(f7, 2, 2, 1)));
}

TEST_CASE("image_of examples") {
  auto full = Subspace<FiniteField>::full(f7, 2);
  CHECK(image_of(space<FiniteField>({E(f7, 2, 1, 1), E(f7, 2, 2, 2)}), full) == full);
  CHECK(image_of(MatSpace<FiniteField>::zero(f7, 2, 2), full).is_zero());
  CHECK(image_of(sk3(f7), span(f7, 3, {{1, 0, 0}})) == span(f7, 3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("preimage_of examples") {
  auto sp = space<FiniteField>({E(f7, 2, 1, 1), E(f7, 2, 1, 2)});
  CHECK(preimage_of(sp, Subspace<FiniteField>::full(f7, 2)) == Subspace<FiniteField>::full(f7, 2));
  auto w = span(f7, 3, {{1, 2, 0}});
  CHECK(preimage_of(identity_space(f7, 3), w) == w);
  CHECK(preimage_of(sp, span(f7, 2, {{0, 1}})).is_zero());
}

TEST_CASE("products and powers") {
  auto n = jordan3(f7);
  CHECK(power(space<FiniteField>({n}), 2).same_span(space<FiniteField>({E(f7, 3, 1, 3)})));
  auto sp = space<FiniteField>({E(f7, 3, 1, 2), E(f7, 3, 2, 3)});
  CHECK(power(sp, 2).same_span(space<FiniteField>({E(f7, 3, 1, 3)})));
  CHECK(power(sp, 3).is_zero());
  CHECK(product(sp, identity_space(f7, 3)).same_span(sp));
  CHECK(power(sp, 0).same_span(identity_space(f7, 3)));
}

TEST_CASE("commutator spaces") {
  auto diag = space<FiniteField>({E(f7, 3, 1, 1), E(f7, 3, 2, 2), E(f7, 3, 3, 3)});
  CHECK(commutator_space(diag).is_zero());
  auto c = commutator_space(space<FiniteField>({E(f7, 2, 1, 2), E(f7, 2, 2, 1)}));
  CHECK(c.same_span(space<FiniteField>({E(f7, 2, 1, 1) - E(f7, 2, 2, 2)})));
  CHECK(commutator_space(space<FiniteField>({Matrix<FiniteField>::identity(f7, 3), jordan3(f7)})).is_zero());
  CHECK_THROWS_AS(commutator_space(space<FiniteField>({Matrix<FiniteField>(f7, 2, 3)})), Error);
}

TEST_CASE("generated algebras") {
  auto i3 = Matrix<FiniteField>::identity(f7, 3);
  CHECK(generated_algebra(identity_space(f7, 3)).same_span(identity_space(f7, 3)));
  auto n = jordan3(f7);
  auto alg = generated_algebra(space<FiniteField>({i3, n}));
  CHECK(alg.dim() == 3);
  CHECK(alg.contains(n * n));
  auto i2 = Matrix<FiniteField>::identity(f7, 2);
  CHECK(generated_algebra(space<FiniteField>({i2, E(f7, 2, 1, 2), E(f7, 2, 2, 1)})).dim() == 4);
  try {
    generated_algebra(space<FiniteField>({n}));
    FAIL("missing identity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityMissing);
  }
}

TEST_CASE("transpose spaces") {
  auto sym = space<FiniteField>({E(f7, 2, 1, 2) + E(f7, 2, 2, 1), E(f7, 2, 1, 1)});
  CHECK(transpose_space(sym).same_span(sym));
  auto sp = space<FiniteField>({mat(f7, {{1, 2, 3}, {4, 5, 6}})});
  CHECK(transpose_space(transpose_space(sp)).same_span(sp));
  CHECK(transpose_space(space<FiniteField>({E(f7, 2, 1, 2)})).same_span(space<FiniteField>({E(f7, 2, 2, 1)})));
}

TEST_CASE("image/preimage properties on random instances") {
  std::mt19937_64 rng(29);
  for (const auto& f : {FiniteField::prime(2), FiniteField::prime(3), FiniteField::prime(5)}) {
    for (int it = 0; it < 120; ++it) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4, m = 1 + rng() % 3;
      std::vector<Matrix<FiniteField>> gens;
      for (std::size_t k = 0; k < m; ++k) gens.push_back(random_matrix(f, r, c, rng));
      auto sp = MatSpace<FiniteField>::from_spanning(gens);
      auto u = random_subspace(f, c, rng);
      auto s = sum(u, random_subspace(f, c, rng));
      auto w = random_subspace(f, r, rng);
      auto t = sum(w, random_subspace(f, r, rng));

      CHECK(contains(image_of(sp, s), image_of(sp, u)));
      CHECK(contains(preimage_of(sp, t), preimage_of(sp, w)));
      CHECK(contains(preimage_of(sp, image_of(sp, u)), u));
      CHECK(contains(w, image_of(sp, preimage_of(sp, w))));

      // Definitional preimage: intersection of the single-matrix preimages.
      auto direct = Subspace<FiniteField>::full(f, c);
      for (const auto& g : sp.gens()) {
        auto wq = quotient_coords(w);
        direct = intersect(direct, kernel(wq.proj * g));
      }
      CHECK(direct == preimage_of(sp, w));

      // Order of generators does not matter.
      std::vector<Matrix<FiniteField>> rev(gens.rbegin(), gens.rend());
      auto sp2 = MatSpace<FiniteField>::from_spanning(rev);
      CHECK(image_of(sp2, u) == image_of(sp, u));
      CHECK(preimage_of(sp2, w) == preimage_of(sp, w));
    }
  }
}

TEST_CASE("generated algebra is closed") {
  std::mt19937_64 rng(31);
  auto f = FiniteField::prime(3);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<Matrix<FiniteField>> gens{Matrix<FiniteField>::identity(f, n)};
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) gens.push_back(random_matrix(f, n, n, rng));
    auto d = generated_algebra(MatSpace<FiniteField>::from_spanning(gens));
    CHECK(contains(d, product(d, d)));
  }
}
