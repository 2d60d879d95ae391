#pragma once

// Exact coefficient domains: GF(p), GF(p^k) and the rationals.
//
// Both field types expose the same static interface (value_type, zero, one,
// add, sub, neg, mul, inv, is_zero, equal, from_int, element, to_string) so
// that every algorithm in the library is written once as a template over the
// field. Field handles are cheap to copy and immutable; equality of handles is
// equality of their FieldSpec.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "wongseq/error.hpp"

namespace wongseq {

struct FieldSpec {
  enum class Kind { Prime, Extension, Rational };

  Kind kind = Kind::Rational;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  // Monic modulus, lowest degree first, size k + 1. Extension kind only.
  std::vector<std::uint32_t> modulus;

  static FieldSpec prime(std::uint32_t p) { return {Kind::Prime, p, 1, {}}; }
  static FieldSpec rational() { return {}; }

  bool is_finite() const { return kind != Kind::Rational; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class FiniteField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_finite = true;

  static FiniteField make(const FieldSpec& spec);
  static FiniteField prime(std::uint32_t p);
  // modulus: monic, lowest degree first.
  static FiniteField extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  // GF(p^k) with the first irreducible monic modulus in degree-lex order.
  static FiniteField of_order(std::uint32_t p, std::uint32_t k);

  const FieldSpec& spec() const { return *spec_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  std::optional<std::uint64_t> cardinality() const { return q_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type add(value_type a, value_type b) const {
    if (add_) return add_[a * q_ + b];
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return digitwise(a, b, false);
  }
  value_type sub(value_type a, value_type b) const {
    if (sub_) return sub_[a * q_ + b];
    if (k_ == 1) return a >= b ? a - b : a + p_ - b;
    return digitwise(a, b, true);
  }
  value_type neg(value_type a) const { return sub(0, a); }
  value_type mul(value_type a, value_type b) const {
    if (mul_) return mul_[a * q_ + b];
    if (k_ == 1) return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  value_type inv(value_type a) const;
  // a + b * c, the elimination kernel.
  value_type mul_add(value_type a, value_type b, value_type c) const { return add(a, mul(b, c)); }

  value_type from_int(long long v) const;
  value_type from_mpz(const mpz_class& v) const;
  // Canonical enumeration: element i has base-p digits of i as coefficients.
  value_type element(std::uint64_t index) const { return static_cast<value_type>(index); }
  std::vector<std::uint32_t> coefficients(value_type a) const;
  value_type from_coefficients(std::span<const std::uint32_t> c) const;
  std::string to_string(value_type a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.data_ == b.data_ || *a.spec_ == *b.spec_;
  }

 private:
  struct Data;
  explicit FiniteField(std::shared_ptr<const Data> data);
  value_type digitwise(value_type a, value_type b, bool subtract) const;

  std::shared_ptr<const Data> data_;
  const FieldSpec* spec_ = nullptr;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 1;
  std::uint64_t q_ = 0;
  const std::uint32_t* add_ = nullptr;
  const std::uint32_t* sub_ = nullptr;
  const std::uint32_t* mul_ = nullptr;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* exp_ = nullptr;
};

class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_finite = false;

  const FieldSpec& spec() const;
  std::optional<std::uint64_t> cardinality() const { return std::nullopt; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type mul_add(const value_type& a, const value_type& b, const value_type& c) const {
    return a + b * c;
  }

  value_type from_int(long long v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
  value_type element(std::uint64_t index) const {
    return mpq_class(mpz_class(static_cast<unsigned long>(index)));
  }
  std::string to_string(const value_type& a) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
inline constexpr bool is_rational_field_v = std::is_same_v<F, RationalField>;

template <class F>
concept ExactField = std::is_same_v<F, FiniteField> || std::is_same_v<F, RationalField>;

// Field-tagged scalar. Arithmetic across different fields throws FieldMismatch.
template <ExactField F>
class Scalar {
 public:
  using value_type = typename F::value_type;

  Scalar(F field, value_type v) : field_(std::move(field)), value_(std::move(v)) {}

  const F& field() const { return field_; }
  const value_type& value() const { return value_; }

  Scalar inverse() const { return {field_, field_.inv(value_)}; }
  Scalar operator-() const { return {field_, field_.neg(value_)}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.value_, b.field_.inv(b.value_))};
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.field_.equal(a.value_, b.value_);
  }

  std::string to_string() const { return field_.to_string(value_); }

 private:
  static void check(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_))
      throw Error(ErrorCode::FieldMismatch,
                  a.field_.spec().name() + " vs " + b.field_.spec().name());
  }

  F field_;
  value_type value_;
};

// Ring embedding GF(p^k) -> GF(p^K), determined by the image of the generator x.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField source, FiniteField target);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  bool is_identity() const { return source_ == target_; }
  FiniteField::value_type operator()(FiniteField::value_type a) const;

 private:
  FiniteField source_;
  FiniteField target_;
  FiniteField::value_type generator_image_ = 0;
};

struct SizedFiniteField {
  FiniteField field;
  FieldEmbedding embedding;
  bool extended = false;
};

// Smallest field containing `field` with at least t elements. For GF(p^k) the
// degree of the result is the least multiple of k that is large enough.
SizedFiniteField ensure_size(const FiniteField& field, std::uint64_t t);
inline RationalField ensure_size(const RationalField& field, std::uint64_t) { return field; }

template <ExactField F>
std::vector<typename F::value_type> distinct_elements(const F& field, std::uint64_t t) {
  if (auto q = field.cardinality(); q && *q < t)
    throw Error(ErrorCode::FieldTooSmall,
                field.spec().name() + " has fewer than " + std::to_string(t) + " elements");
  std::vector<typename F::value_type> out;
  out.reserve(t);
  for (std::uint64_t i = 0; i < t; ++i) out.push_back(field.element(i));
  return out;
}

// Bits in the larger of numerator and denominator.
std::size_t bit_length(const mpq_class& v);

}  // namespace wongseq
