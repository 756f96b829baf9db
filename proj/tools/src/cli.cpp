#include "hopf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hopf/algebra_file.hpp"
#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"
#include "hopf/identity.hpp"
#include "hopf/verification.hpp"

namespace hopf::cli {

namespace {

constexpr const char* kBuiltinPrefix = "builtin:";

// Raised for unusable command-line input (missing files, bad tables).
class InputError : public Error {
 public:
  using Error::Error;
};

HopfAlgebra load_input(const std::string& spec) {
  if (spec.rfind(kBuiltinPrefix, 0) == 0) {
    const std::string name = spec.substr(std::string(kBuiltinPrefix).size());
    try {
      return build_builtin(name);
    } catch (const std::logic_error&) {
      throw InputError("unknown builtin algebra \"" + name + "\"");
    } catch (const InvalidAlgebra&) {
      throw;
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  if (!std::filesystem::is_regular_file(spec)) throw InputError("cannot read " + spec);
  return read_algebra(spec);
}

std::vector<IdentityProgram> load_corpus(const std::string& path) {
  if (std::filesystem::is_directory(path)) return read_corpus_dir(path);
  if (std::filesystem::is_regular_file(path)) return read_corpus_file(path);
  throw InputError("cannot read corpus " + path);
}

std::vector<std::vector<std::size_t>> parse_table(const std::string& spec) {
  std::string text = spec;
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::replace(text.begin(), text.end(), ';', '\n');
  std::replace(text.begin(), text.end(), ',', ' ');
  std::vector<std::vector<std::size_t>> table;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<std::size_t> row;
    std::string cell;
    while (cells >> cell) {
      if (cell.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("table entry \"" + cell + "\" is not a non-negative integer");
      row.push_back(std::stoul(cell));
    }
    if (!row.empty()) table.push_back(std::move(row));
  }
  if (table.empty()) throw InputError("empty multiplication table");
  for (const auto& row : table)
    if (row.size() != table.size()) throw InputError("multiplication table must be square");
  return table;
}

// Prints the validation report and returns false when the axioms fail.
bool ensure_valid(const HopfAlgebra& h, std::ostream& out) {
  const ValidationReport vr = validate(h);
  if (vr.ok()) return true;
  out << vr.report.to_text();
  return false;
}

int finish(const Report& report, std::ostream& out) {
  out << report.to_text();
  return report.all_pass() ? kExitPass : kExitFail;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += format_vec(m.row_span(r));
  }
  return out + "]";
}

std::string format_order(const Matrix& m) {
  const auto order = multiplicative_order(m, 1024);
  return order ? std::to_string(*order) : std::string("none<=1024");
}

int cmd_verify_axioms(const std::string& input, std::ostream& out) {
  const HopfAlgebra h = load_input(input);
  Report report = validate(h).report;
  report.append(check_galois(h));
  return finish(report, out);
}

int cmd_modular(const std::string& input, std::ostream& out) {
  const HopfAlgebra h = load_input(input);
  if (!ensure_valid(h, out)) return kExitFail;
  const ValidatedAlgebra v(h);
  const ModularData md = compute_modular_data(v);
  const std::string& name = h.name();
  out << "phi " << name << ' ' << format_vec(md.phi) << '\n';
  out << "psi " << name << ' ' << format_vec(md.psi) << '\n';
  out << "delta " << name << ' ' << format_vec(md.delta) << '\n';
  out << "delta_inverse " << name << ' ' << format_vec(md.delta_inverse) << '\n';
  out << "sigma " << name << ' ' << format_matrix(md.sigma) << '\n';
  out << "sigma_prime " << name << ' ' << format_matrix(md.sigma_prime) << '\n';
  out << "tau " << name << ' ' << md.tau.to_string() << '\n';
  out << "sigma_order " << name << ' ' << format_order(md.sigma) << '\n';
  out << "sigma_prime_order " << name << ' ' << format_order(md.sigma_prime) << '\n';
  out << "antipode_order " << name << ' ' << format_order(h.antipode()) << '\n';
  return finish(check_modular(v, md), out);
}

int cmd_dual(const std::string& input, const std::string& output, std::ostream& out) {
  const HopfAlgebra h = load_input(input);
  if (!ensure_valid(h, out)) return kExitFail;
  const PairedSystem sys = PairedSystem::build(h);
  Report report = sys.dual_integral_report();
  report.append(check_pairing(sys));
  if (output.empty()) {
    // The algebra file goes to stdout, so the report is only shown on failure.
    out << format_algebra(*sys.dual());
    if (report.all_pass()) return kExitPass;
  } else {
    write_algebra(*sys.dual(), output);
  }
  return finish(report, out);
}

int cmd_radford(const std::string& input, std::ostream& out) {
  const HopfAlgebra h = load_input(input);
  if (!ensure_valid(h, out)) return kExitFail;
  const PairedSystem sys = PairedSystem::build(h);
  Report report{h.name(), {}};
  report.append(check_prop21(sys));
  report.append(check_prop22(sys));
  report.append(check_corollaries(sys));
  report.append(check_radford(sys));
  report.append(check_selfduality(sys));
  report.append(biduality_check(sys));
  return finish(report, out);
}

int cmd_check(const std::string& input, const std::string& corpus, std::ostream& out) {
  const auto programs = load_corpus(corpus);
  const HopfAlgebra h = load_input(input);
  if (!ensure_valid(h, out)) return kExitFail;
  return finish(evaluate_corpus(programs, PairedSystem::build(h)), out);
}

int cmd_full_report(const std::string& input, const std::string& corpus, std::ostream& out) {
  std::optional<std::vector<IdentityProgram>> programs;
  if (!corpus.empty()) programs = load_corpus(corpus);
  const HopfAlgebra h = load_input(input);
  if (!ensure_valid(h, out)) return kExitFail;
  const PairedSystem sys = PairedSystem::build(h);
  Report report = full_report(sys);
  if (programs) report.append(prefixed(evaluate_corpus(*programs, sys), "dsl."));
  return finish(report, out);
}

int cmd_example(const std::string& kind, unsigned n, const std::string& table,
                const std::string& name, const std::string& output, std::ostream& out) {
  std::optional<HopfAlgebra> h;
  if (kind == "sweedler") {
    h = build_sweedler();
  } else if (kind == "taft") {
    if (n < 2) throw InputError("taft needs --n K with K >= 2");
    h = build_taft(n);
  } else if (kind == "group-algebra" || kind == "function-algebra") {
    if (table.empty()) throw InputError(kind + " needs --table");
    try {
      const GroupPresentation g = GroupPresentation::from_table(name, parse_table(table));
      g.validate();
      h = kind == "group-algebra" ? build_group_algebra(g) : build_function_algebra(g);
    } catch (const InvalidAlgebra& e) {
      throw InputError(std::string("invalid group table: ") + e.what());
    }
  } else {
    throw InputError("unknown example \"" + kind +
                     "\" (expected sweedler, taft, group-algebra, function-algebra)");
  }
  if (output.empty()) {
    out << format_algebra(*h);
  } else {
    write_algebra(*h, output);
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of finite-dimensional Hopf algebra identities", "hopfkit"};
  app.require_subcommand(1);
  const std::string input_help =
      "algebra file, or builtin:<name> with <name> one of group_Z2, group_Z6, group_S3, fun_Z2, "
      "fun_Z6, fun_S3, sweedler_H4, taft_T2, taft_T3, taft_T4";

  std::string input, output, corpus, kind, table, group_name = "G";
  unsigned taft_n = 0;

  auto* verify = app.add_subcommand("verify-axioms", "check the Hopf axioms and regularity");
  verify->add_option("input", input, input_help)->required();

  auto* modular = app.add_subcommand("modular", "print integrals, modular element and automorphisms");
  modular->add_option("input", input, input_help)->required();

  auto* dual = app.add_subcommand("dual", "build the dual Hopf algebra");
  dual->add_option("input", input, input_help)->required();
  dual->add_option("-o,--output", output, "output algebra file (default: stdout)");

  auto* radford = app.add_subcommand("radford", "check the propositions, Radford and biduality");
  radford->add_option("input", input, input_help)->required();

  auto* check = app.add_subcommand("check", "evaluate an identity corpus");
  check->add_option("input", input, input_help)->required();
  check->add_option("--corpus", corpus, "corpus directory or .hid file")->required();

  auto* example = app.add_subcommand("example", "write a builtin example algebra");
  example->add_option("kind", kind, "sweedler | taft | group-algebra | function-algebra")
      ->required();
  example->add_option("--n", taft_n, "Taft parameter");
  example->add_option("--table", table,
                      "group multiplication table: a file, or rows separated by ';'");
  example->add_option("--name", group_name, "group name used in the algebra name");
  example->add_option("-o,--output", output, "output algebra file (default: stdout)");

  auto* full = app.add_subcommand("full-report", "run every check");
  full->add_option("input", input, input_help)->required();
  full->add_option("--corpus", corpus, "also evaluate this identity corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "hopfkit: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify_axioms(input, out);
    if (modular->parsed()) return cmd_modular(input, out);
    if (dual->parsed()) return cmd_dual(input, output, out);
    if (radford->parsed()) return cmd_radford(input, out);
    if (check->parsed()) return cmd_check(input, corpus, out);
    if (example->parsed()) return cmd_example(kind, taft_n, table, group_name, output, out);
    if (full->parsed()) return cmd_full_report(input, corpus, out);
  } catch (const SyntaxError& e) {
    err << "hopfkit: syntax error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SemanticError& e) {
    err << "hopfkit: invalid input: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SortError& e) {
    err << "hopfkit: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "hopfkit: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvalidAlgebra& e) {
    err << "hopfkit: " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    err << "hopfkit: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInputError;
}

}  // namespace hopf::cli
