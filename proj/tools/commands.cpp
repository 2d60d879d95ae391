#include "commands.hpp"

#include <random>

namespace wongseq::cli {

namespace {

template <ExactField F>
json header(const char* algorithm, const Instance<F>& inst) {
  return {{"algorithm", algorithm},
          {"field", field_to_json(inst.field.spec())},
          {"n", inst.n},
          {"n_cols", inst.n_cols},
          {"basis_size", inst.basis.size()}};
}

// Coefficients against sp.gens() spread over the instance basis list.
template <ExactField F, ExactField W>
json expand(const MatSpace<F>& sp, const W& w, const std::vector<typename W::value_type>& c,
            std::size_t count) {
  std::vector<typename W::value_type> full(count, w.zero());
  for (std::size_t k = 0; k < c.size(); ++k) full[sp.source_indices()[k]] = c[k];
  return vector_to_json(w, full);
}

template <ExactField F>
json rows_of(const Subspace<F>& u) {
  json rows = json::array();
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(vector_to_json(u.field(), u.vector(i)));
  return rows;
}

template <ExactField F>
Outcome smr_impl(const Instance<F>& inst) {
  const auto sp = inst.space();
  const auto res = smr(sp);
  Outcome o{header("smr", inst), res.status == SmrStatus::FailedPo ? 2 : 0};
  o.doc["status"] = to_string(res.status);
  o.doc["rank"] = res.rank;
  o.doc["coefficients"] = expand(sp, res.working_field, res.coefficients, inst.basis.size());
  o.doc["working_field"] = field_to_json(res.working_field.spec());
  if (res.witness) {
    o.doc["witness_basis"] = rows_of(*res.witness);
    o.doc["c"] = res.c;
  }
  o.doc["trace_summary"] = {{"iterations", res.iterations},
                            {"ranks_visited", res.ranks_visited},
                            {"primes_tried", json::array()}};
  return o;
}

template <ExactField F>
Outcome sdit_tri_impl(const Instance<F>& inst) {
  const auto out = tri_algo(inst.field, inst.n, inst.basis);
  Outcome o{header("tri_algo", inst), out.kind == TriKind::Fail ? 2 : 0};
  o.doc["status"] = to_string(out.kind);
  o.doc["working_field"] = field_to_json(inst.field.spec());
  if (out.kind == TriKind::Nonsingular) {
    o.doc["coefficients"] = vector_to_json(inst.field, out.coefficients);
    o.doc["rank"] = inst.n;
  }
  if (out.witness) {
    o.doc["witness_basis"] = rows_of(*out.witness);
    o.doc["c"] = out.witness->dim() - image_of(inst.space(), *out.witness).dim();
  }
  o.doc["trace_summary"] = {
      {"iterations", out.depth}, {"ranks_visited", json::array()}, {"primes_tried", json::array()}};
  return o;
}

template <ExactField F>
Outcome tri_test_impl(const Instance<F>& inst, std::size_t pivot) {
  if (pivot >= inst.basis.size()) throw Error(ErrorCode::Parse, "pivot index out of range");
  const bool t = is_triangularizable_with_nonsingular(inst.space(), inst.basis[pivot]);
  Outcome o{header("tri_test", inst), 0};
  o.doc["pivot"] = pivot;
  o.doc["triangularizable"] = t;
  o.doc["status"] = t ? "triangularizable" : "not_triangularizable";
  return o;
}

template <ExactField F>
Outcome wong_impl(const Instance<F>& inst, std::size_t anchor, const std::string& kind) {
  if (anchor >= inst.basis.size()) throw Error(ErrorCode::Parse, "anchor index out of range");
  const auto sp = inst.space();
  WongTrace<F> t = kind == "first" ? first_wong(inst.basis[anchor], sp) : second_wong(inst.basis[anchor], sp);
  Outcome o{header("wong", inst), 0};
  o.doc["kind"] = kind;
  o.doc["anchor"] = anchor;
  o.doc["status"] = "ok";
  json terms = json::array();
  for (const auto& u : t.terms) terms.push_back(subspace_to_json(u));
  o.doc["terms"] = terms;
  o.doc["limit"] = subspace_to_json(t.limit);
  return o;
}

template <ExactField F>
Outcome po_impl(const Instance<F>& inst, const json& ju, const json& jup) {
  const auto sp = inst.space();
  PoInstance<F> po{sp, subspace_from_json(inst.field, ju), subspace_from_json(inst.field, jup)};
  Outcome o{header("po", inst), 0};
  o.doc["u"] = subspace_to_json(po.u);
  o.doc["u_prime"] = subspace_to_json(po.u_prime);
  const auto search = find_ell(po);
  if (!search.ell) {
    o.doc["status"] = "none_exists";
    o.doc["found"] = false;
    return o;
  }
  const auto ans = solve_po(po);
  o.doc["found"] = ans.found;
  if (!ans.found) {
    o.doc["status"] = "failed";
    o.doc["ell"] = *search.ell;
    o.code = 2;
    return o;
  }
  o.doc["status"] = "found";
  o.doc["ell"] = ans.ell;
  o.doc["d"] = matrix_to_json(*ans.d);
  o.doc["coefficients"] = expand(sp, inst.field, ans.coefficients, inst.basis.size());
  return o;
}

const Instance<FiniteField>& finite(const AnyInstance& inst, const char* what) {
  if (const auto* f = std::get_if<Instance<FiniteField>>(&inst)) return *f;
  throw Error(ErrorCode::Unsupported, std::string(what) + " needs a finite field");
}

template <ExactField F>
Instance<F> to_instance(const MatSpace<F>& sp) {
  return {sp.field(), sp.rows(), sp.cols(), sp.gens()};
}

template <ExactField F>
json named_instance(const F& f, const std::string& name, const GalleryParams& p) {
  const auto unit = [&](std::size_t n, std::size_t i, std::size_t j) {
    Matrix<F> m(f, n, n);
    m(i, j) = f.one();
    return m;
  };
  Instance<F> inst{f, p.n, p.n, {}};
  if (name == "sk3") return instance_to_json(to_instance(gallery::sk3(f)));
  if (name == "sk3-yz-lift")
    return instance_to_json(to_instance(gallery::yz_lift(gallery::sk3(f), Matrix<F>::identity(f, 3))));
  if (name == "sk3-yz-shifted")
    return instance_to_json(to_instance(gallery::yz_lift_shifted(gallery::sk3(f), Matrix<F>::identity(f, 3))));
  if (name == "sk3-upper") return instance_to_json(to_instance(gallery::strict_upper_embed(gallery::sk3(f))));
  if (name == "diag") {
    for (std::size_t i = 0; i < p.n; ++i) inst.basis.push_back(unit(p.n, i, i));
    return instance_to_json(inst);
  }
  if (name == "full") {
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = 0; j < p.n; ++j) inst.basis.push_back(unit(p.n, i, j));
    return instance_to_json(inst);
  }
  if (name == "upper2") {
    inst.n = inst.n_cols = 2;
    inst.basis = {Matrix<F>::identity(f, 2) + unit(2, 0, 1), unit(2, 0, 1)};
    return instance_to_json(inst);
  }
  if constexpr (std::is_same_v<F, FiniteField>) {
    std::mt19937_64 rng(p.seed);
    if (name == "random-rank1") {
      auto sp = gallery::random_rank1_space(f, p.n, p.n_cols.value_or(p.n), p.m, rng);
      return instance_to_json(to_instance(sp));
    }
    if (name == "random-triangular") {
      if (p.zero_slot && *p.zero_slot >= p.n) throw Error(ErrorCode::Parse, "zero slot out of range");
      inst.basis = gallery::random_triangular(f, p.n, p.m, rng, p.zero_slot).gens;
      return instance_to_json(inst);
    }
  }
  throw Error(ErrorCode::Parse, "unknown gallery entry '" + name + "' for " + f.spec().name());
}

}  // namespace

Outcome smr_command(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return smr_impl(i); }, inst);
}

Outcome sdit_tri_command(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return sdit_tri_impl(i); }, inst);
}

Outcome sdit_mod_p_command(const AnyInstance& any, std::optional<std::size_t> prime_budget) {
  const auto* inst = std::get_if<Instance<RationalField>>(&any);
  if (!inst) throw Error(ErrorCode::Unsupported, "--mod-p needs a rational instance");
  const auto rep = rational_sdit(inst->basis, prime_budget);
  Outcome o{header("rational_sdit", *inst), rep.nonsingular ? 0 : 2};
  o.doc["status"] = rep.nonsingular ? "nonsingular_combination" : "inconclusive";
  o.doc["bound_used"] = rep.bound_used.get_str();
  o.doc["primes_tried"] = rep.primes_tried;
  o.doc["prime_budget"] = prime_budget ? json(*prime_budget) : json(nullptr);
  json scales = json::array();
  for (const auto& s : rep.scales) scales.push_back(s.get_str());
  o.doc["scales"] = scales;
  if (rep.nonsingular) {
    o.doc["prime_used"] = *rep.prime_used;
    o.doc["working_field"] = field_to_json(FieldSpec::prime(*rep.prime_used));
    json ints = json::array();
    for (const auto& c : rep.integer_coefficients) ints.push_back(c.get_str());
    o.doc["integer_coefficients"] = ints;
    o.doc["coefficients"] = vector_to_json(RationalField{}, rep.coefficients);
    o.doc["rank"] = inst->n;
  } else {
    o.doc["working_field"] = field_to_json(FieldSpec::rational());
  }
  o.doc["trace_summary"] = {{"iterations", rep.primes_tried.size()},
                            {"ranks_visited", json::array()},
                            {"primes_tried", rep.primes_tried}};
  return o;
}

Outcome tri_test_command(const AnyInstance& inst, std::size_t pivot) {
  return std::visit([&](const auto& i) { return tri_test_impl(i, pivot); }, inst);
}

Outcome wong_command(const AnyInstance& inst, std::size_t anchor, const std::string& kind) {
  if (kind != "first" && kind != "second") throw Error(ErrorCode::Parse, "kind is first or second");
  return std::visit([&](const auto& i) { return wong_impl(i, anchor, kind); }, inst);
}

Outcome po_command(const AnyInstance& inst, const json& u, const json& u_prime) {
  return std::visit([&](const auto& i) { return po_impl(i, u, u_prime); }, inst);
}

Outcome oracle_command(const AnyInstance& any, std::uint64_t budget) {
  const auto& inst = finite(any, "oracle");
  const auto sp = inst.space();
  const auto rep = oracle_report(sp, budget);
  Outcome o{header("oracle", inst), 0};
  o.doc["status"] = "ok";
  o.doc["budget"] = budget;
  o.doc["max_rank"] = rep.max_rank;
  o.doc["disc"] = rep.disc;
  o.doc["cork"] = rep.cork;
  o.doc["argmax_coefficients"] = expand(sp, inst.field, rep.argmax_coefficients, inst.basis.size());
  o.doc["argmax_witness"] = subspace_to_json(rep.argmax_witness);
  o.doc["enumerated_elements"] = rep.enumerated_elements;
  o.doc["enumerated_subspaces"] = rep.enumerated_subspaces;
  o.doc["is_compression"] = rep.is_compression;
  return o;
}

json gallery_command(const std::string& name, const GalleryParams& params) {
  const auto spec = field_from_name(params.field);
  if (!spec.is_finite()) return named_instance(RationalField{}, name, params);
  return named_instance(FiniteField::make(spec), name, params);
}

std::vector<std::string> gallery_names() {
  return {"sk3", "sk3-yz-lift", "sk3-yz-shifted", "sk3-upper", "diag", "full", "upper2",
          "random-rank1", "random-triangular"};
}

}  // namespace wongseq::cli
