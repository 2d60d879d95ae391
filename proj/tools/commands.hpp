#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json_io.hpp"

namespace wongseq::cli {

struct Outcome {
  json doc;
  int code = 0;
};

Outcome smr_command(const AnyInstance& inst);
Outcome sdit_tri_command(const AnyInstance& inst);
Outcome sdit_mod_p_command(const AnyInstance& inst, std::optional<std::size_t> prime_budget);
Outcome tri_test_command(const AnyInstance& inst, std::size_t pivot);
Outcome wong_command(const AnyInstance& inst, std::size_t anchor, const std::string& kind);
Outcome po_command(const AnyInstance& inst, const json& u, const json& u_prime);
Outcome oracle_command(const AnyInstance& inst, std::uint64_t budget);

struct GalleryParams {
  std::string field = "gf5";
  std::size_t n = 3;
  std::optional<std::size_t> n_cols;
  std::size_t m = 3;
  std::uint64_t seed = 1;
  std::optional<std::size_t> zero_slot;
};

json gallery_command(const std::string& name, const GalleryParams& params);
std::vector<std::string> gallery_names();

using Checks = std::vector<std::pair<std::string, bool>>;

Checks verify_certificate(const AnyInstance& inst, const json& cert);

}  // namespace wongseq::cli
