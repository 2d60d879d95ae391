#pragma once

// JSON forms of fields, scalars, matrices, subspaces and instance files.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wongseq/wongseq.hpp"

namespace wongseq::cli {

using json = nlohmann::json;

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

// Accepts "q", "gf<p>" and "gf<p>^<k>".
FieldSpec field_from_name(const std::string& name);

inline json scalar_to_json(const FiniteField& f, FiniteField::value_type v) {
  if (f.degree() == 1) return v;
  return f.coefficients(v);
}

inline json scalar_to_json(const RationalField&, const mpq_class& v) { return v.get_str(); }

FiniteField::value_type scalar_from_json(const FiniteField& f, const json& j);
mpq_class scalar_from_json(const RationalField& f, const json& j);

template <ExactField F>
json vector_to_json(const F& f, std::span<const typename F::value_type> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(f, x));
  return out;
}

template <ExactField F>
std::vector<typename F::value_type> vector_from_json(const F& f, const json& j, std::size_t len) {
  if (!j.is_array() || j.size() != len)
    throw Error(ErrorCode::Parse, "expected an array of " + std::to_string(len) + " scalars");
  std::vector<typename F::value_type> v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

template <ExactField F>
json matrix_to_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.field(), m.row(i)));
  return out;
}

template <ExactField F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(rows) + " matrix rows");
  Matrix<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = vector_from_json(f, j[i], cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = std::move(r[c]);
  }
  return m;
}

template <ExactField F>
json subspace_to_json(const Subspace<F>& u) {
  json basis = json::array();
  for (std::size_t i = 0; i < u.dim(); ++i) basis.push_back(vector_to_json(u.field(), u.vector(i)));
  return {{"ambient_dim", u.ambient_dim()}, {"basis", basis}};
}

template <ExactField F>
Subspace<F> subspace_from_json(const F& f, const json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis") || !j["basis"].is_array())
    throw Error(ErrorCode::Parse, "subspace needs ambient_dim and basis");
  if (j.contains("field") && !(field_from_json(j["field"]) == f.spec()))
    throw Error(ErrorCode::FieldMismatch, "subspace field differs from the instance field");
  const auto n = j["ambient_dim"].get<std::size_t>();
  std::vector<std::vector<typename F::value_type>> vs;
  for (const auto& v : j["basis"]) vs.push_back(vector_from_json(f, v, n));
  return Subspace<F>::span(f, n, vs);
}

template <ExactField F>
struct Instance {
  F field;
  std::size_t n = 0;
  std::size_t n_cols = 0;
  std::vector<Matrix<F>> basis;

  MatSpace<F> space() const { return MatSpace<F>::from_spanning(field, n, n_cols, basis); }
};

using AnyInstance = std::variant<Instance<FiniteField>, Instance<RationalField>>;

AnyInstance instance_from_json(const json& j);

template <ExactField F>
json instance_to_json(const Instance<F>& inst) {
  json basis = json::array();
  for (const auto& b : inst.basis) basis.push_back(matrix_to_json(b));
  return {{"field", field_to_json(inst.field.spec())},
          {"n", inst.n},
          {"n_cols", inst.n_cols},
          {"basis", basis}};
}

json read_json_file(const std::string& path);
std::string dump(const json& j);

}  // namespace wongseq::cli
