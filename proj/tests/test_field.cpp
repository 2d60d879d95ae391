#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace wongseq;

TEST_CASE("prime field inverse") {
  auto f = FiniteField::prime(7);
  CHECK(f.inv(3) == 5);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.neg(2) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
}

TEST_CASE("GF(4): x * x = x + 1") {
  auto f = FiniteField::extension(2, {1, 1, 1});
  const auto x = f.from_coefficients(std::vector<std::uint32_t>{0, 1});
  const auto x_plus_1 = f.from_coefficients(std::vector<std::uint32_t>{1, 1});
  CHECK(f.mul(x, x) == x_plus_1);
  CHECK(f.to_string(f.mul(x, x)) == "x+1");
}

TEST_CASE("rational inverse") {
  RationalField q;
  CHECK(q.inv(mpq_class(-2, 3)) == mpq_class(-3, 2));
  mpq_class v(4, -6);
  v.canonicalize();
  CHECK(q.to_string(v) == "-2/3");
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FiniteField::prime(9), Error);
  try {
    FiniteField::prime(1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrimeModulus);
  }
  try {
    FiniteField::extension(2, {1, 0, 1});  // (x+1)^2
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  CHECK_THROWS_AS(FiniteField::extension(2, {1, 1, 2}), Error);
}

TEST_CASE("ensure_size") {
  SUBCASE("GF(2) to 5 elements") {
    auto s = ensure_size(FiniteField::prime(2), 5);
    CHECK(s.extended);
    CHECK(s.field.order() == 8);
    CHECK(s.field.spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(s.embedding(0) == 0);
    CHECK(s.embedding(1) == 1);
  }
  SUBCASE("large enough field unchanged") {
    auto f = FiniteField::prime(11);
    auto s = ensure_size(f, 5);
    CHECK_FALSE(s.extended);
    CHECK(s.field == f);
  }
  SUBCASE("rationals unchanged") {
    RationalField q;
    CHECK(ensure_size(q, 1000000) == q);
  }
  SUBCASE("idempotent") {
    auto s = ensure_size(FiniteField::prime(3), 20);
    CHECK(s.field.order() == 27);
    auto t = ensure_size(s.field, 20);
    CHECK_FALSE(t.extended);
    CHECK(t.field == s.field);
  }
  SUBCASE("extension base keeps a multiple of its degree") {
    auto f4 = FiniteField::of_order(2, 2);
    auto s = ensure_size(f4, 9);
    CHECK(s.field.degree() == 4);
  }
}

TEST_CASE("embeddings are ring homomorphisms") {
  std::mt19937_64 rng(11);
  const std::vector<std::pair<FiniteField, std::uint64_t>> cases = {
      {FiniteField::prime(2), 5},
      {FiniteField::prime(3), 10},
      {FiniteField::of_order(2, 2), 9},
      {FiniteField::of_order(3, 2), 100},
  };
  for (const auto& [f, t] : cases) {
    auto s = ensure_size(f, t);
    const auto& e = s.embedding;
    for (int it = 0; it < 200; ++it) {
      auto a = testing_support::random_element(f, rng);
      auto b = testing_support::random_element(f, rng);
      CHECK(e(f.add(a, b)) == s.field.add(e(a), e(b)));
      CHECK(e(f.mul(a, b)) == s.field.mul(e(a), e(b)));
    }
  }
}

TEST_CASE("distinct_elements") {
  CHECK(distinct_elements(FiniteField::prime(7), 3) == std::vector<std::uint32_t>{0, 1, 2});
  auto f4 = FiniteField::extension(2, {1, 1, 1});
  auto els = distinct_elements(f4, 4);
  std::vector<std::string> names;
  for (auto e : els) names.push_back(f4.to_string(e));
  CHECK(names == std::vector<std::string>{"0", "1", "x", "x+1"});
  RationalField q;
  auto qs = distinct_elements(q, 4);
  CHECK(qs == std::vector<mpq_class>{0, 1, 2, 3});
  try {
    distinct_elements(FiniteField::prime(3), 4);
    FAIL("expected FieldTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooSmall);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(5);
  for (const auto& f : {FiniteField::prime(2), FiniteField::prime(7), FiniteField::prime(251),
                        FiniteField::prime(65521), FiniteField::of_order(2, 3),
                        FiniteField::of_order(3, 3), FiniteField::of_order(2, 10),
                        FiniteField::of_order(5, 4)}) {
    CAPTURE(f.spec().name());
    for (int it = 0; it < 300; ++it) {
      auto a = testing_support::random_element(f, rng);
      auto b = testing_support::random_element(f, rng);
      auto c = testing_support::random_element(f, rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("rational arithmetic stays reduced and small") {
  std::mt19937_64 rng(3);
  RationalField q;
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int it = 0; it < 300; ++it) {
    long den_a = d(rng), den_b = d(rng);
    if (den_a == 0 || den_b == 0) continue;
    mpq_class a(d(rng), 1), b(d(rng), 1);
    a /= den_a;
    b /= den_b;
    for (const auto& r : {q.add(a, b), q.mul(a, b), q.sub(a, b)}) {
      CHECK(sgn(r.get_den()) > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
      CHECK(g == 1);
      CHECK(bit_length(r) <= bit_length(a) + bit_length(b) + 2);
    }
  }
}

TEST_CASE("scalars refuse cross-field arithmetic") {
  Scalar<FiniteField> a(FiniteField::prime(5), 2);
  Scalar<FiniteField> b(FiniteField::prime(7), 2);
  try {
    (void)(a + b);
    FAIL("mixed-field sum accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  Scalar<FiniteField> c(FiniteField::prime(5), 3);
  CHECK((a * c).value() == 1);
  CHECK((a / c).value() == 4);
  CHECK(a.inverse().value() == 3);
}
