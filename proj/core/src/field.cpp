#include "wongseq/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wongseq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::IdentityMissing: return "IdentityMissing";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::SingularS: return "SingularS";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::Prime: return "GF(" + std::to_string(p) + ")";
    case Kind::Extension: return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    case Kind::Rational: return "Q";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = (std::uint64_t{a.back()} * lead_inv) % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (c * b[i]) % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t index, std::uint32_t p, std::uint32_t k) {
  Poly c(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

std::uint64_t undigits(const Poly& c, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// a * b mod modulus, all as digit vectors of length k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = 2 * k; d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) % p * c) % p;
  }
  Poly out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits(idx, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder)
      throw Error(ErrorCode::Unsupported, "extension fields are limited to 2^20 elements");
  }
  return q;
}

}  // namespace

struct FiniteField::Data {
  FieldSpec spec;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> add, sub, mul, inv, log, exp;
};

FiniteField::FiniteField(std::shared_ptr<const Data> data) : data_(std::move(data)) {
  spec_ = &data_->spec;
  p_ = data_->spec.p;
  k_ = data_->spec.k;
  q_ = data_->q;
  if (!data_->add.empty()) add_ = data_->add.data();
  if (!data_->sub.empty()) sub_ = data_->sub.data();
  if (!data_->mul.empty()) mul_ = data_->mul.data();
  if (!data_->log.empty()) log_ = data_->log.data();
  if (!data_->exp.empty()) exp_ = data_->exp.data();
}

FiniteField FiniteField::make(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::Prime: return prime(spec.p);
    case FieldSpec::Kind::Extension: return extension(spec.p, spec.modulus);
    case FieldSpec::Kind::Rational: break;
  }
  throw Error(ErrorCode::Unsupported, "the rationals are not a finite field");
}

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
  auto data = std::make_shared<Data>();
  data->spec = FieldSpec::prime(p);
  data->q = p;
  if (p <= kTableLimit) {
    data->add.resize(p * p);
    data->sub.resize(p * p);
    data->mul.resize(p * p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        data->add[a * p + b] = (a + b) % p;
        data->sub[a * p + b] = (a + p - b) % p;
        data->mul[a * p + b] = (a * b) % p;
      }
    data->inv.resize(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) data->inv[a] = inv_mod(a, p);
  }
  return FiniteField(std::move(data));
}

FiniteField FiniteField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p >= (1u << 16))
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  if (!is_irreducible(modulus, p))
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");

  const std::uint64_t q = checked_power(p, k);
  auto data = std::make_shared<Data>();
  data->spec = FieldSpec{FieldSpec::Kind::Extension, p, k, modulus};
  data->q = q;

  if (q <= kTableLimit) {
    data->add.resize(q * q);
    data->sub.resize(q * q);
    data->mul.resize(q * q);
    data->inv.resize(q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
      const Poly da = digits(a, p, k);
      for (std::uint64_t b = 0; b < q; ++b) {
        const Poly db = digits(b, p, k);
        Poly s(k), d(k);
        for (std::uint32_t i = 0; i < k; ++i) {
          s[i] = (da[i] + db[i]) % p;
          d[i] = (da[i] + p - db[i]) % p;
        }
        data->add[a * q + b] = static_cast<std::uint32_t>(undigits(s, p));
        data->sub[a * q + b] = static_cast<std::uint32_t>(undigits(d, p));
        data->mul[a * q + b] = static_cast<std::uint32_t>(undigits(mulmod(da, db, modulus, p), p));
      }
    }
    for (std::uint64_t a = 1; a < q; ++a)
      for (std::uint64_t b = 1; b < q; ++b)
        if (data->mul[a * q + b] == 1) {
          data->inv[a] = static_cast<std::uint32_t>(b);
          break;
        }
  } else {
    // Discrete log tables from the first primitive element in enumeration order.
    const Poly one = digits(1, p, k);
    for (std::uint64_t g = 2; g < q; ++g) {
      const Poly dg = digits(g, p, k);
      std::vector<std::uint32_t> exp(2 * (q - 1));
      std::vector<std::uint32_t> log(q, 0);
      Poly cur = one;
      bool primitive = true;
      for (std::uint64_t e = 0; e < q - 1; ++e) {
        const auto idx = static_cast<std::uint32_t>(undigits(cur, p));
        if (e > 0 && idx == 1) {
          primitive = false;
          break;
        }
        exp[e] = idx;
        log[idx] = static_cast<std::uint32_t>(e);
        cur = mulmod(cur, dg, modulus, p);
      }
      if (!primitive) continue;
      for (std::uint64_t e = q - 1; e < 2 * (q - 1); ++e) exp[e] = exp[e - (q - 1)];
      data->exp = std::move(exp);
      data->log = std::move(log);
      break;
    }
  }
  return FiniteField(std::move(data));
}

FiniteField FiniteField::of_order(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (k == 1) return prime(p);
  const std::uint64_t count = checked_power(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = digits(idx, p, k);
    f.push_back(1);
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) return extension(p, std::move(f));
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

FiniteField::value_type FiniteField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!data_->inv.empty()) return data_->inv[a];
  if (k_ == 1) return inv_mod(a, p_);
  return exp_[(q_ - 1) - log_[a]];
}

FiniteField::value_type FiniteField::digitwise(value_type a, value_type b, bool subtract) const {
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
  }
  return static_cast<value_type>(out);
}

FiniteField::value_type FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

FiniteField::value_type FiniteField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<value_type>(r.get_ui());
}

std::vector<std::uint32_t> FiniteField::coefficients(value_type a) const { return digits(a, p_, k_); }

FiniteField::value_type FiniteField::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() > k_) throw Error(ErrorCode::Parse, "too many coefficients for " + spec().name());
  Poly d(c.begin(), c.end());
  for (auto x : d)
    if (x >= p_) throw Error(ErrorCode::Parse, "coefficient out of range for " + spec().name());
  return static_cast<value_type>(undigits(d, p_));
}

std::string FiniteField::to_string(value_type a) const {
  if (k_ == 1) return std::to_string(a);
  const Poly c = coefficients(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const FieldSpec& RationalField::spec() const {
  static const FieldSpec s = FieldSpec::rational();
  return s;
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  mpq_class out;
  mpq_inv(out.get_mpq_t(), a.get_mpq_t());
  return out;
}

std::string RationalField::to_string(const value_type& a) const { return a.get_str(); }

FieldEmbedding::FieldEmbedding(FiniteField source, FiniteField target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_ == target_) {
    generator_image_ = source_.degree() > 1 ? source_.element(source_.characteristic()) : 0;
    return;
  }
  if (source_.characteristic() != target_.characteristic() ||
      target_.degree() % source_.degree() != 0)
    throw Error(ErrorCode::Unsupported,
                source_.spec().name() + " does not embed into " + target_.spec().name());
  if (source_.degree() == 1) return;
  // Image of x: the first root of the source modulus in the target.
  const auto& mod = source_.spec().modulus;
  for (std::uint64_t i = 0; i < target_.order(); ++i) {
    const auto r = target_.element(i);
    FiniteField::value_type acc = target_.zero();
    for (std::size_t d = mod.size(); d-- > 0;)
      acc = target_.add(target_.mul(acc, r), target_.from_int(mod[d]));
    if (target_.is_zero(acc)) {
      generator_image_ = r;
      return;
    }
  }
  throw Error(ErrorCode::Unsupported, "no root of the source modulus in the target field");
}

FiniteField::value_type FieldEmbedding::operator()(FiniteField::value_type a) const {
  if (is_identity()) return a;
  if (source_.degree() == 1) return target_.from_int(a);
  const auto c = source_.coefficients(a);
  FiniteField::value_type acc = target_.zero();
  for (std::size_t d = c.size(); d-- > 0;)
    acc = target_.add(target_.mul(acc, generator_image_), target_.from_int(c[d]));
  return acc;
}

SizedFiniteField ensure_size(const FiniteField& field, std::uint64_t t) {
  if (field.order() >= t) return {field, FieldEmbedding(field, field), false};
  const std::uint32_t p = field.characteristic();
  const std::uint32_t k = field.degree();
  std::uint32_t K = k;
  std::uint64_t q = field.order();
  while (q < t) {
    K += k;
    q = checked_power(p, K);
  }
  FiniteField big = FiniteField::of_order(p, K);
  return {big, FieldEmbedding(field, big), true};
}

std::size_t bit_length(const mpq_class& v) {
  const std::size_t num = sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_num_mpz_t(), 2);
  return std::max(num, mpz_sizeinbase(v.get_den_mpz_t(), 2));
}

}  // namespace wongseq
