#include "commands.hpp"

namespace wongseq::cli {

namespace {

template <ExactField F>
struct Working {
  F field;
  std::vector<Matrix<F>> basis;
};

Working<FiniteField> working(const Instance<FiniteField>& inst, const json& spec) {
  const auto ws = field_from_json(spec);
  if (ws == inst.field.spec()) return {inst.field, inst.basis};
  if (!ws.is_finite()) throw Error(ErrorCode::FieldMismatch, "working field is not finite");
  const auto w = FiniteField::make(ws);
  const FieldEmbedding emb(inst.field, w);
  Working<FiniteField> out{w, {}};
  for (const auto& b : inst.basis) out.basis.push_back(embed(b, emb));
  return out;
}

Working<RationalField> working(const Instance<RationalField>& inst, const json& spec) {
  if (field_from_json(spec).is_finite()) throw Error(ErrorCode::FieldMismatch, "working field must be Q");
  return {inst.field, inst.basis};
}

template <ExactField F>
Matrix<F> combine(const F& f, std::size_t rows, std::size_t cols, const std::vector<Matrix<F>>& basis,
                  const json& coeffs) {
  const auto c = vector_from_json(f, coeffs, basis.size());
  Matrix<F> s(f, rows, cols);
  for (std::size_t i = 0; i < basis.size(); ++i) s.add_scaled(c[i], basis[i]);
  return s;
}

// dim U - dim B(U) for the witness rows in the certificate.
template <ExactField F>
std::ptrdiff_t deficiency(const F& f, std::size_t rows, std::size_t cols, const std::vector<Matrix<F>>& basis,
                          const json& witness_rows) {
  if (!witness_rows.is_array()) throw Error(ErrorCode::Parse, "witness_basis must be an array");
  std::vector<std::vector<typename F::value_type>> vs;
  for (const auto& v : witness_rows) vs.push_back(vector_from_json(f, v, cols));
  const auto u = Subspace<F>::span(f, cols, vs);
  const auto sp = MatSpace<F>::from_spanning(f, rows, cols, basis);
  return static_cast<std::ptrdiff_t>(u.dim()) - static_cast<std::ptrdiff_t>(image_of(sp, u).dim());
}

template <ExactField F>
void verify_smr(const Instance<F>& inst, const json& cert, Checks& out) {
  const auto w = working(inst, cert.at("working_field"));
  const auto r = cert.at("rank").get<std::size_t>();
  out.emplace_back("rank", rank(combine(w.field, inst.n, inst.n_cols, w.basis, cert.at("coefficients"))) == r);
  const auto status = cert.at("status").get<std::string>();
  const bool claims_max = status != "failed_po";
  out.emplace_back("status", !claims_max || cert.contains("witness_basis"));
  if (cert.contains("witness_basis")) {
    const auto c = cert.at("c").get<std::size_t>();
    const auto d = deficiency(w.field, inst.n, inst.n_cols, w.basis, cert["witness_basis"]);
    out.emplace_back("witness", d >= static_cast<std::ptrdiff_t>(c));
    out.emplace_back("maximality", c + r == inst.n_cols);
  }
}

template <ExactField F>
void verify_tri(const Instance<F>& inst, const json& cert, Checks& out) {
  const auto status = cert.at("status").get<std::string>();
  if (status == "nonsingular") {
    out.emplace_back("nonsingular",
                     rank(combine(inst.field, inst.n, inst.n_cols, inst.basis, cert.at("coefficients"))) == inst.n);
  } else if (status == "witness") {
    const auto c = cert.at("c").get<std::size_t>();
    const auto d = deficiency(inst.field, inst.n, inst.n_cols, inst.basis, cert.at("witness_basis"));
    out.emplace_back("witness", c >= 1 && d >= static_cast<std::ptrdiff_t>(c));
  } else if (status == "fail") {
    out.emplace_back("recomputed", tri_algo(inst.field, inst.n, inst.basis).kind == TriKind::Fail);
  } else {
    throw Error(ErrorCode::Parse, "unknown tri_algo status '" + status + "'");
  }
}

void verify_rational_sdit(const Instance<RationalField>& inst, const json& cert, Checks& out) {
  std::optional<std::size_t> budget;
  if (cert.contains("prime_budget") && !cert["prime_budget"].is_null()) budget = cert["prime_budget"].get<std::size_t>();
  const auto status = cert.at("status").get<std::string>();
  if (status == "nonsingular_combination") {
    RationalField q;
    const auto s = combine(q, inst.n, inst.n_cols, inst.basis, cert.at("coefficients"));
    out.emplace_back("determinant", inst.n == inst.n_cols && sgn(determinant(s)) != 0);

    const auto p = cert.at("prime_used").get<std::uint32_t>();
    const auto coeffs = vector_from_json(q, cert.at("coefficients"), inst.basis.size());
    const auto ints = vector_from_json(q, cert.at("integer_coefficients"), inst.basis.size());
    const auto scales = vector_from_json(q, cert.at("scales"), inst.basis.size());
    bool lift = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      lift = lift && ints[i].get_den() == 1 && ints[i] >= 0 && ints[i] < p && coeffs[i] == ints[i] * scales[i];
    out.emplace_back("integer_lift", lift);
    const auto tried = cert.at("primes_tried").get<std::vector<std::uint32_t>>();
    out.emplace_back("prime", is_prime(p) && p > inst.n && std::find(tried.begin(), tried.end(), p) != tried.end() &&
                                  mpz_class(p) <= mpz_class(cert.at("bound_used").get<std::string>()));
  } else if (status != "inconclusive") {
    throw Error(ErrorCode::Parse, "unknown rational_sdit status '" + status + "'");
  }
  const auto rep = rational_sdit(inst.basis, budget);
  out.emplace_back("recomputed", rep.nonsingular == (status == "nonsingular_combination") &&
                                     rep.bound_used.get_str() == cert.at("bound_used").get<std::string>() &&
                                     json(rep.primes_tried) == cert.at("primes_tried"));
}

template <ExactField F>
void verify_tri_test(const Instance<F>& inst, const json& cert, Checks& out) {
  const auto pivot = cert.at("pivot").get<std::size_t>();
  if (pivot >= inst.basis.size()) throw Error(ErrorCode::Parse, "pivot index out of range");
  out.emplace_back("recomputed", is_triangularizable_with_nonsingular(inst.space(), inst.basis[pivot]) ==
                                     cert.at("triangularizable").get<bool>());
}

template <ExactField F>
void verify_wong(const Instance<F>& inst, const json& cert, Checks& out) {
  const auto again = wong_command(inst, cert.at("anchor").get<std::size_t>(), cert.at("kind").get<std::string>());
  out.emplace_back("recomputed", again.doc.at("terms") == cert.at("terms") && again.doc.at("limit") == cert.at("limit"));
}

template <ExactField F>
void verify_po(const Instance<F>& inst, const json& cert, Checks& out) {
  const auto sp = inst.space();
  PoInstance<F> po{sp, subspace_from_json(inst.field, cert.at("u")), subspace_from_json(inst.field, cert.at("u_prime"))};
  const auto search = find_ell(po);
  const auto status = cert.at("status").get<std::string>();
  if (status == "found") {
    const auto d = combine(inst.field, inst.n, inst.n_cols, inst.basis, cert.at("coefficients"));
    out.emplace_back("d_matches", d == matrix_from_json(inst.field, cert.at("d"), inst.n, inst.n_cols));
    const auto ell = cert.at("ell").get<std::size_t>();
    Matrix<F> power = Matrix<F>::identity(inst.field, inst.n);
    for (std::size_t i = 0; i < ell; ++i) power = power * d;
    out.emplace_back("overflow", !contains(po.u_prime, apply(power, po.u)));
    out.emplace_back("minimal_ell", search.ell && *search.ell == ell);
  } else if (status == "none_exists") {
    out.emplace_back("no_overflow", !search.ell);
  } else if (status == "failed") {
    out.emplace_back("ell_exists", search.ell.has_value());
  } else {
    throw Error(ErrorCode::Parse, "unknown po status '" + status + "'");
  }
}

void verify_oracle(const Instance<FiniteField>& inst, const json& cert, Checks& out) {
  const auto max_rank = cert.at("max_rank").get<std::size_t>();
  const auto disc = cert.at("disc").get<std::size_t>();
  const auto cork = cert.at("cork").get<std::size_t>();
  out.emplace_back("argmax_rank",
                   rank(combine(inst.field, inst.n, inst.n_cols, inst.basis, cert.at("argmax_coefficients"))) == max_rank);
  const auto& w = cert.at("argmax_witness");
  const auto d = deficiency(inst.field, inst.n, inst.n_cols, inst.basis, w.at("basis"));
  out.emplace_back("witness", d == static_cast<std::ptrdiff_t>(disc));
  out.emplace_back("cork", cork + max_rank == inst.n_cols && disc <= cork);
  out.emplace_back("compression_flag", cert.at("is_compression").get<bool>() == (disc == cork));
  const auto rep = oracle_report(inst.space(), cert.at("budget").get<std::uint64_t>());
  out.emplace_back("recomputed", rep.max_rank == max_rank && rep.disc == disc);
}

}  // namespace

Checks verify_certificate(const AnyInstance& any, const json& cert) {
  Checks out;
  const auto algorithm = cert.at("algorithm").get<std::string>();
  const auto spec = field_from_json(cert.at("field"));
  std::visit(
      [&](const auto& inst) {
        out.emplace_back("instance", spec == inst.field.spec() && cert.at("n").get<std::size_t>() == inst.n &&
                                         cert.at("n_cols").get<std::size_t>() == inst.n_cols &&
                                         cert.at("basis_size").get<std::size_t>() == inst.basis.size());
        if (!out.back().second) return;
        using I = std::decay_t<decltype(inst)>;
        if (algorithm == "smr") {
          verify_smr(inst, cert, out);
        } else if (algorithm == "tri_algo") {
          verify_tri(inst, cert, out);
        } else if (algorithm == "rational_sdit") {
          if constexpr (std::is_same_v<I, Instance<RationalField>>) verify_rational_sdit(inst, cert, out);
          else throw Error(ErrorCode::Unsupported, "rational_sdit certificate on a finite instance");
        } else if (algorithm == "tri_test") {
          verify_tri_test(inst, cert, out);
        } else if (algorithm == "wong") {
          verify_wong(inst, cert, out);
        } else if (algorithm == "po") {
          verify_po(inst, cert, out);
        } else if (algorithm == "oracle") {
          if constexpr (std::is_same_v<I, Instance<FiniteField>>) verify_oracle(inst, cert, out);
          else throw Error(ErrorCode::Unsupported, "oracle certificate on a rational instance");
        } else {
          throw Error(ErrorCode::Parse, "unknown algorithm '" + algorithm + "'");
        }
      },
      any);
  return out;
}

}  // namespace wongseq::cli
