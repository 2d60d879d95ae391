#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace wongseq::cli {

namespace {

std::uint32_t small_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xffffffffu)
    throw Error(ErrorCode::Parse, std::string(what) + " must be a small nonnegative integer");
  return j.get<std::uint32_t>();
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::Prime: return {{"kind", "prime"}, {"p", spec.p}};
    case FieldSpec::Kind::Extension:
      return {{"kind", "extension"}, {"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
    case FieldSpec::Kind::Rational: return {{"kind", "rational"}};
  }
  return {};
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::Parse, "field needs a kind");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (!j.contains("p")) throw Error(ErrorCode::Parse, "finite field needs p");
  const auto p = small_uint(j["p"], "p");
  if (kind == "prime") return FieldSpec::prime(p);
  if (kind != "extension") throw Error(ErrorCode::Parse, "unknown field kind '" + kind + "'");
  if (!j.contains("modulus") || !j["modulus"].is_array())
    throw Error(ErrorCode::Parse, "extension field needs a modulus array");
  FieldSpec s{FieldSpec::Kind::Extension, p, 0, {}};
  for (const auto& c : j["modulus"]) s.modulus.push_back(small_uint(c, "modulus coefficient"));
  if (s.modulus.size() < 2) throw Error(ErrorCode::Parse, "modulus must have degree at least 1");
  s.k = static_cast<std::uint32_t>(s.modulus.size() - 1);
  if (j.contains("k") && small_uint(j["k"], "k") != s.k)
    throw Error(ErrorCode::Parse, "k does not match the modulus degree");
  return s;
}

FieldSpec field_from_name(const std::string& name) {
  if (name == "q" || name == "Q") return FieldSpec::rational();
  if (name.rfind("gf", 0) != 0) throw Error(ErrorCode::Parse, "unknown field '" + name + "'");
  const auto rest = name.substr(2);
  const auto hat = rest.find('^');
  try {
    std::size_t used = 0;
    const auto p = std::stoul(rest.substr(0, hat), &used);
    if (used != rest.substr(0, hat).size()) throw std::invalid_argument(name);
    if (hat == std::string::npos) return FieldSpec::prime(static_cast<std::uint32_t>(p));
    const auto k = std::stoul(rest.substr(hat + 1), &used);
    if (used != rest.size() - hat - 1) throw std::invalid_argument(name);
    if (k == 1) return FieldSpec::prime(static_cast<std::uint32_t>(p));
    return FiniteField::of_order(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)).spec();
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "unknown field '" + name + "'");
  }
}

FiniteField::value_type scalar_from_json(const FiniteField& f, const json& j) {
  if (f.degree() == 1) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= f.order())
      throw Error(ErrorCode::Parse, "entry " + j.dump() + " is not in 0.." + std::to_string(f.order() - 1));
    return f.element(j.get<std::uint64_t>());
  }
  if (!j.is_array()) throw Error(ErrorCode::Parse, "extension entries are coefficient arrays");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) c.push_back(small_uint(x, "coefficient"));
  return f.from_coefficients(c);
}

mpq_class scalar_from_json(const RationalField&, const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.get<long>()));
  if (!j.is_string()) throw Error(ErrorCode::Parse, "rational entries are \"num/den\" strings");
  const auto s = j.get<std::string>();
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  if (sgn(v.get_den()) == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  v.canonicalize();
  return v;
}

namespace {

template <ExactField F>
Instance<F> parse_matrices(F f, const json& j) {
  Instance<F> inst{std::move(f), 0, 0, {}};
  if (!j.contains("n") || !j.contains("basis") || !j["basis"].is_array())
    throw Error(ErrorCode::Parse, "instance needs n and basis");
  inst.n = j["n"].get<std::size_t>();
  inst.n_cols = j.contains("n_cols") ? j["n_cols"].get<std::size_t>() : inst.n;
  for (const auto& m : j["basis"]) inst.basis.push_back(matrix_from_json(inst.field, m, inst.n, inst.n_cols));
  return inst;
}

}  // namespace

AnyInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw Error(ErrorCode::Parse, "instance needs a field");
  const auto spec = field_from_json(j["field"]);
  if (spec.is_finite()) return parse_matrices(FiniteField::make(spec), j);
  return parse_matrices(RationalField{}, j);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace wongseq::cli
