#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopf/algebra_file.hpp"
#include "hopf/catalog.hpp"
#include "hopf/cli.hpp"

using namespace hopf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hopfkit_cli_" + name);
}

}  // namespace

TEST_CASE("example then radford on Sweedler") {
  const auto path = temp_file("h4.alg");
  CHECK(run({"example", "sweedler", "-o", path.string()}).code == cli::kExitPass);
  const Run r = run({"radford", path.string()});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("radford.S4_sandwich sweedler_H4 PASS") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("modular prints tau and the sigma order") {
  const auto path = temp_file("t3.alg");
  CHECK(run({"example", "taft", "--n", "3", "-o", path.string()}).code == cli::kExitPass);
  const Run r = run({"modular", path.string()});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("tau taft_T3 -z - 1\n") != std::string::npos);
  CHECK(r.out.find("sigma_order taft_T3 3\n") != std::string::npos);
  CHECK(r.out.find("antipode_order taft_T3 6\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("a zeroed antipode exits 1") {
  const HopfAlgebra h = build_sweedler();
  const HopfAlgebra bad(h.data(), Matrix::zero(h.field(), 4, 4));
  const auto path = temp_file("corrupted.alg");
  write_algebra(bad, path);
  const Run r = run({"radford", path.string()});
  CHECK(r.code == cli::kExitFail);
  CHECK(r.out.find("axiom.antipode_left sweedler_H4 FAIL") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"modular", "/nonexistent/file.alg"}).code == cli::kExitInputError);
  CHECK(run({"modular", "builtin:nope"}).code == cli::kExitInputError);
  CHECK(run({"example", "taft"}).code == cli::kExitInputError);
  CHECK(run({"example", "group-algebra", "--table", "0 1;1 1"}).code == cli::kExitInputError);
  const auto path = temp_file("garbage.alg");
  std::ofstream(path) << "{not json";
  CHECK(run({"verify-axioms", path.string()}).code == cli::kExitInputError);
  std::filesystem::remove(path);
}

TEST_CASE("group tables from the command line") {
  const Run r = run({"example", "function-algebra", "--table", "0 1 2;1 2 0;2 0 1", "--name",
                     "Z3"});
  CHECK(r.code == cli::kExitPass);
  const HopfAlgebra h = parse_algebra(r.out);
  CHECK(h.dim() == 3);
}

TEST_CASE("dual output parses back") {
  const Run r = run({"dual", "builtin:taft_T3"});
  CHECK(r.code == cli::kExitPass);
  CHECK(parse_algebra(r.out).name() == "taft_T3_dual");
}

TEST_CASE("corpus checks and the negative entry") {
  CHECK(run({"check", "builtin:sweedler_H4", "--corpus", HOPFKIT_CORPUS_DIR}).code ==
        cli::kExitPass);
  const Run neg = run({"check", "builtin:taft_T3", "--corpus",
                       std::string(HOPFKIT_CORPUS_DIR) + "/negative"});
  CHECK(neg.code == cli::kExitFail);
  CHECK(neg.out.find("radford.swapped taft_T3 FAIL") != std::string::npos);
  CHECK(run({"check", "builtin:taft_T3", "--corpus", "/nonexistent"}).code ==
        cli::kExitInputError);
}

TEST_CASE("full report is deterministic") {
  const Run a = run({"full-report", "builtin:taft_T3"});
  const Run b = run({"full-report", "builtin:taft_T3"});
  CHECK(a.code == cli::kExitPass);
  CHECK(a.out == b.out);
}
