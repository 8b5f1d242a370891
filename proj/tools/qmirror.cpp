// qmirror: exact verification of the quintic-mirror monodromy computations,
// plus small ad-hoc tools (closure, charpoly, order, membership, |Sp|).
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodromy/charpoly.hpp"
#include "monodromy/checks.hpp"
#include "monodromy/constants.hpp"
#include "monodromy/gamma_hat.hpp"
#include "monodromy/group.hpp"
#include "monodromy/matrix_io.hpp"
#include "monodromy/version.hpp"
#include "monodromy/word.hpp"

namespace {

using namespace monodromy;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << text;
}

// Collapses a parsed file into mod matrices: integer matrices are reduced
// by `mod` (required then); modular ones must agree with `mod` when given.
std::vector<ModMatrix> as_mod_matrices(const std::vector<AnyMatrix>& parsed,
                                       std::optional<std::uint64_t> mod) {
  std::vector<ModMatrix> out;
  for (const auto& any : parsed) {
    if (std::holds_alternative<ModMatrix>(any)) {
      const auto& m = std::get<ModMatrix>(any);
      if (mod && m.modulus() != *mod) {
        throw ParseError("matrix modulus disagrees with --mod");
      }
      out.push_back(m);
    } else {
      if (!mod) {
        throw ParseError(
            "integer matrices need --mod to pick the residue ring");
      }
      out.push_back(reduce_mod(std::get<IntMatrix>(any), *mod));
    }
  }
  return out;
}

int cmd_verify(const std::string& target, const CheckParams& params,
               const std::string& format, const std::string& out_path) {
  MonodromyConstants k = MonodromyConstants::standard();
  VerificationReport rep = target == "all"
                               ? run_all(k, params)
                               : run_checks(k, params, {target});
  if (format == "json") {
    write_output(report_to_json(rep).dump(2) + "\n", out_path);
  } else {
    write_output(report_to_text(rep), out_path);
  }
  return rep.all_passed() ? kExitOk : kExitFailed;
}

int cmd_closure(const std::string& file, std::optional<std::uint64_t> mod,
                std::uint64_t cap, const std::string& dump_path) {
  std::vector<ModMatrix> mats = as_mod_matrices(load_matrices_file(file), mod);
  if (mats.empty()) throw ParseError("no generators in " + file);
  GeneratorSet gens;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    gens.add("g" + std::to_string(i + 1), mats[i]);
  }
  FiniteMatrixGroup g = closure(gens, cap);
  if (!g.closed) {
    std::cout << "cap exceeded: " << g.order()
              << " elements reached (cap " << cap << ")\n";
    return kExitFailed;
  }
  std::cout << "order: " << g.order() << "\n";
  if (!dump_path.empty()) write_output(group_dump(g), dump_path);
  return kExitOk;
}

int cmd_charpoly(const std::string& file) {
  for (const auto& any : load_matrices_file(file)) {
    if (!std::holds_alternative<IntMatrix>(any)) {
      throw ParseError("charpoly expects integer matrices");
    }
    std::cout << charpoly(std::get<IntMatrix>(any)).to_string() << "\n";
  }
  return kExitOk;
}

int cmd_order(const std::string& file, unsigned long cap) {
  for (const auto& any : load_matrices_file(file)) {
    std::optional<unsigned long> ord;
    if (std::holds_alternative<IntMatrix>(any)) {
      ord = element_order(std::get<IntMatrix>(any), cap);
    } else {
      ord = element_order(std::get<ModMatrix>(any), cap);
    }
    if (ord) {
      std::cout << *ord << "\n";
    } else {
      std::cout << "infinite (up to " << cap << ")\n";
    }
  }
  return kExitOk;
}

int cmd_member(const std::string& dump_file, const std::string& matrix_file) {
  std::ifstream in(dump_file, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + dump_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  FiniteMatrixGroup g = load_group_dump(buf.str());

  bool all_in = true;
  for (const ModMatrix& m :
       as_mod_matrices(load_matrices_file(matrix_file), g.modulus)) {
    const bool in_group = member(g, m);
    std::cout << (in_group ? "member" : "not a member") << "\n";
    all_in = all_in && in_group;
  }
  return all_in ? kExitOk : kExitFailed;
}

int cmd_sporder(unsigned n, unsigned long p, unsigned k) {
  std::cout << sp_order(n, p, k).get_str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix-group verification of the quintic-mirror "
               "monodromy computations"};
  app.set_version_flag("--version", monodromy::kVersion);
  app.require_subcommand(1);

  // verify
  CheckParams params;
  std::string target = "all";
  std::string format = "text";
  std::string out_path;
  std::optional<std::size_t> samples_override;
  auto* verify = app.add_subcommand(
      "verify", "Run the named verification check (or all of them)");
  verify
      ->add_option("target", target,
                   "all, lemma1, apow, theorem, charpoly, orders, "
                   "congruence or cor52")
      ->check(CLI::IsMember({"all", "lemma1", "apow", "theorem", "charpoly",
                             "orders", "congruence", "cor52"}));
  verify->add_option("--seed", params.seed, "Seed for the sampled checks");
  verify->add_option("--samples", samples_override,
                     "Override every per-check sample count");
  verify->add_option("--max-len", params.max_len,
                     "Maximum letters per sampled word");
  verify->add_option("--cap", params.closure_cap, "Closure element cap");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report here (default: "
                     "standard output)");

  // closure
  std::string gen_file;
  std::optional<std::uint64_t> modulus;
  std::uint64_t closure_cap = 10'000'000;
  std::string dump_path;
  auto* clo = app.add_subcommand(
      "closure", "Close a generator set under multiplication");
  clo->add_option("file", gen_file, "Matrix file with the generators")
      ->required();
  clo->add_option("--mod", modulus,
                  "Residue ring for integer-matrix generators");
  clo->add_option("--cap", closure_cap, "Give up beyond this many elements");
  clo->add_option("--dump", dump_path, "Write the canonical group dump here");

  // charpoly
  std::string charpoly_file;
  auto* chp = app.add_subcommand(
      "charpoly", "Characteristic polynomial of each integer matrix");
  chp->add_option("file", charpoly_file, "Matrix file")->required();

  // order
  std::string order_file;
  unsigned long order_cap = 1000;
  auto* ord = app.add_subcommand(
      "order", "Multiplicative order of each matrix, up to a cap");
  ord->add_option("file", order_file, "Matrix file")->required();
  ord->add_option("--cap", order_cap, "Largest order to try");

  // member
  std::string member_dump, member_file;
  auto* mem = app.add_subcommand(
      "member", "Test matrices against a group dump (exit 0 iff all are "
                "members, 1 otherwise)");
  mem->add_option("group", member_dump, "Group dump file")->required();
  mem->add_option("file", member_file, "Matrix file")->required();

  // sporder
  unsigned sp_n = 0, sp_k = 0;
  unsigned long sp_p = 0;
  auto* spo = app.add_subcommand(
      "sporder", "|Sp(2n, Z/p^k Z)| for prime p");
  spo->add_option("n", sp_n, "Half the matrix dimension")->required();
  spo->add_option("p", sp_p, "Prime modulus base")->required();
  spo->add_option("k", sp_k, "Prime-power exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (samples_override) {
      params.census_samples = *samples_override;
      params.order_samples = *samples_override;
      params.display_samples = *samples_override;
      params.transvection_samples = *samples_override;
    }
    if (verify->parsed()) return cmd_verify(target, params, format, out_path);
    if (clo->parsed()) {
      return cmd_closure(gen_file, modulus, closure_cap, dump_path);
    }
    if (chp->parsed()) return cmd_charpoly(charpoly_file);
    if (ord->parsed()) return cmd_order(order_file, order_cap);
    if (mem->parsed()) return cmd_member(member_dump, member_file);
    if (spo->parsed()) return cmd_sporder(sp_n, sp_p, sp_k);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
