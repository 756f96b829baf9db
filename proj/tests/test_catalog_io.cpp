#include <doctest.h>

#include <filesystem>

#include "hopf/algebra_file.hpp"
#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"

using namespace hopf;

TEST_CASE("builtin dimensions and fields") {
  CHECK(build_builtin("group_Z6").dim() == 6);
  CHECK(build_builtin("fun_S3").dim() == 6);
  CHECK(build_builtin("sweedler_H4").dim() == 4);
  CHECK(build_builtin("taft_T4").dim() == 16);
  CHECK(build_builtin("taft_T3").field() == FieldSpec::cyclotomic(3));
  CHECK(build_builtin("group_S3").field() == FieldSpec::rational());
  CHECK_THROWS_AS(build_builtin("taft_T1"), Error);
  CHECK_THROWS_AS(build_builtin("nope"), Error);
  CHECK_THROWS_AS(build_taft(1), Error);
}

TEST_CASE("group presentations") {
  const GroupPresentation s3 = GroupPresentation::symmetric3();
  CHECK_NOTHROW(s3.validate());
  CHECK(s3.order() == 6);
  for (std::size_t a = 0; a < 6; ++a) CHECK(s3.table[a][s3.inverse(a)] == s3.identity);
  const GroupPresentation z4 = GroupPresentation::from_table("Z4", {{1, 2, 3, 0},
                                                                   {2, 3, 0, 1},
                                                                   {3, 0, 1, 2},
                                                                   {0, 1, 2, 3}});
  CHECK(z4.identity == 3);
  CHECK_NOTHROW(z4.validate());
  CHECK_THROWS_AS(GroupPresentation::from_table("bad", {{0, 1}, {1, 1}}).validate(),
                  InvalidAlgebra);
  CHECK_THROWS_AS(GroupPresentation::from_table("bad", {{0, 1, 2}, {1, 0}, {2, 2, 2}}),
                  InvalidAlgebra);
}

TEST_CASE("algebra files round-trip") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const HopfAlgebra h = build_builtin(name);
    const std::string text = format_algebra(h);
    const HopfAlgebra back = parse_algebra(text);
    CHECK(back.name() == h.name());
    CHECK(back.field() == h.field());
    CHECK(back.basis() == h.basis());
    CHECK(back.mul() == h.mul());
    CHECK(back.comul() == h.comul());
    CHECK(back.unit() == h.unit());
    CHECK(back.counit() == h.counit());
    CHECK(back.antipode() == h.antipode());
    CHECK(format_algebra(back) == text);
  }
}

TEST_CASE("files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "hopfkit_test_t3.alg";
  write_algebra(build_taft(3), path);
  CHECK(read_algebra(path).mul() == build_taft(3).mul());
  std::filesystem::remove(path);
}

TEST_CASE("missing antipode is synthesised") {
  std::string text = R"({"name": "Z2", "field": {"kind": "rational"}, "dim": 2,
    "basis": ["e", "g"],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
    "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
    "counit": ["1", "1"], "unit": ["1", "0"]})";
  const HopfAlgebra h = parse_algebra(text);
  CHECK(h.antipode().is_identity());
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_algebra("{"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra("[]"), SemanticError);
  CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "field": {"kind": "rational"}, "dim": 1,
    "basis": ["e"], "mul": [[0, 0, 5, "1"]], "comul": [[0, 0, 0, "1"]],
    "counit": ["1"], "unit": ["1"]})"),
                  SemanticError);
  CHECK_THROWS_AS(parse_algebra(R"({"name": "x", "field": {"kind": "rational"}, "dim": 1,
    "basis": ["e"], "mul": [[0, 0, 0, "one"]], "comul": [[0, 0, 0, "1"]],
    "counit": ["1"], "unit": ["1"]})"),
                  Error);
}
