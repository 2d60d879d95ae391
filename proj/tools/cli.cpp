#include "cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace wongseq::cli {

namespace {

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump(doc);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + path);
  f << dump(doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-rank and nonsingular elements of matrix spaces, with certificates"};
  app.require_subcommand(1);

  std::string input, output, cert_path, u_path, uprime_path, kind = "first", gallery_name;
  std::size_t index = 0;
  bool mod_p = false;
  std::optional<std::size_t> prime_budget;
  std::uint64_t budget = kDefaultOracleBudget;
  GalleryParams gp;

  auto* smr_cmd = app.add_subcommand("smr", "maximum rank of a rank-1-spanned space");
  auto* sdit_cmd = app.add_subcommand("sdit-tri", "nonsingular element of a triangularizable space");
  sdit_cmd->add_flag("--mod-p", mod_p, "integer pipeline over primes (rational instances)");
  sdit_cmd->add_option("--prime-budget", prime_budget, "maximum number of primes to try");
  auto* tri_cmd = app.add_subcommand("tri-test", "triangularizability test with a nonsingular pivot");
  tri_cmd->add_option("--pivot", index, "basis index of the pivot matrix")->required();
  auto* wong_cmd = app.add_subcommand("wong", "first or second Wong sequence");
  wong_cmd->add_option("--anchor", index, "basis index of the anchor matrix")->required();
  wong_cmd->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
  auto* po_cmd = app.add_subcommand("po", "power overflow");
  po_cmd->add_option("--u", u_path, "subspace file")->required();
  po_cmd->add_option("--uprime", uprime_path, "subspace file")->required();
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against its instance");
  verify_cmd->add_option("--cert", cert_path)->required();
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive max rank and discrepancy");
  oracle_cmd->add_option("--budget", budget, "enumeration budget");

  for (auto* c : {smr_cmd, sdit_cmd, tri_cmd, wong_cmd, po_cmd, verify_cmd, oracle_cmd})
    c->add_option("instance", input)->required();
  for (auto* c : {smr_cmd, sdit_cmd, tri_cmd, wong_cmd, po_cmd, oracle_cmd}) c->add_option("-o,--output", output);

  auto* gallery_cmd = app.add_subcommand("gallery", "write a named instance");
  gallery_cmd->add_option("name", gallery_name)->required()->check(CLI::IsMember(gallery_names()));
  gallery_cmd->add_option("--field", gp.field, "q, gf<p> or gf<p>^<k>");
  gallery_cmd->add_option("--n", gp.n);
  gallery_cmd->add_option("--n-cols", gp.n_cols);
  gallery_cmd->add_option("--m", gp.m);
  gallery_cmd->add_option("--seed", gp.seed);
  gallery_cmd->add_option("--zero-slot", gp.zero_slot);
  gallery_cmd->add_option("-o,--output", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gallery_cmd->parsed()) {
      emit(gallery_command(gallery_name, gp), output, out);
      return 0;
    }
    const auto inst = instance_from_json(read_json_file(input));
    if (verify_cmd->parsed()) {
      const auto checks = verify_certificate(inst, read_json_file(cert_path));
      bool ok = true;
      for (const auto& [name, pass] : checks) {
        out << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
        ok = ok && pass;
      }
      out << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 2;
    }

    Outcome o;
    if (smr_cmd->parsed()) o = smr_command(inst);
    else if (sdit_cmd->parsed()) o = mod_p ? sdit_mod_p_command(inst, prime_budget) : sdit_tri_command(inst);
    else if (tri_cmd->parsed()) o = tri_test_command(inst, index);
    else if (wong_cmd->parsed()) o = wong_command(inst, index, kind);
    else if (po_cmd->parsed()) o = po_command(inst, read_json_file(u_path), read_json_file(uprime_path));
    else o = oracle_command(inst, budget);
    emit(o.doc, output, out);
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 2 : 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wongseq::cli
