#include <doctest.h>

#include <random>

#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"
#include "hopf/identity.hpp"
#include "hopf/verification.hpp"

using namespace hopf;

namespace {

const PairedSystem& taft3() {
  static const PairedSystem sys = PairedSystem::build(build_taft(3));
  return sys;
}

Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Vec v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(Scalar::from_polynomial(f, {Rational(d(rng)), Rational(d(rng))}));
  return v;
}

}  // namespace

TEST_CASE("parsing produces the expected tree") {
  const IdentityProgram p =
      parse_identity("counit: forall a in A . eps(a(1)) a(2) = a");
  CHECK(p.name == "counit");
  REQUIRE(p.decls.size() == 1);
  CHECK(p.decls[0] == Declaration{"a", Sort::element});
  CHECK(p.lhs.kind == Expr::Kind::product);
  REQUIRE(p.lhs.args.size() == 2);
  CHECK(p.lhs.args[0].kind == Expr::Kind::call);
  CHECK(p.lhs.args[0].args.at(0).leg == 1);
  CHECK(p.rhs.kind == Expr::Kind::variable);
}

TEST_CASE("round trip through the printer") {
  const char* sources[] = {
      "t: forall a in A, y in Ahat . <a, y> = <S(a), Sinv(y)>",
      "t: forall a in A, b in A . 2 * a b = a * (b + b)",
      "t: forall y in Ahat . lact(delta, ract(y, deltainv)) = -1/3 y",
      "t: forall a in A . S(a(1)) a(2) = eps(a) one",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    IdentityProgram p;
    try {
      p = parse_identity(src);
    } catch (const SyntaxError&) {
      // "+" is not part of the language; only the others must parse.
      CHECK(std::string(src).find('+') != std::string::npos);
      continue;
    }
    CHECK(parse_identity(to_string(p)) == p);
    CHECK(to_string(parse_identity(to_string(p))) == to_string(p));
  }
}

TEST_CASE("every corpus identity round-trips") {
  for (const auto& p : read_corpus_dir(HOPFKIT_CORPUS_DIR)) {
    CAPTURE(p.name);
    CHECK(parse_identity(to_string(p)) == p);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_identity("bad: forall a in A . S(a = a");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() > 20);
  }
  CHECK_THROWS_AS(parse_identity("bad forall a in A . a = a"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("bad: forall a in A . frob(a) = a"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("bad: forall a in B . a = a"), SyntaxError);
}

TEST_CASE("sort errors") {
  // Pairing needs an element and a dual element.
  CHECK_THROWS_AS(parse_identity("bad: forall a in A, b in A . <a, b> = 1"), SortError);
  // No products across sorts.
  CHECK_THROWS_AS(parse_identity("bad: forall a in A, y in Ahat . a y = a"), SortError);
  // Both sides of the same sort.
  CHECK_THROWS_AS(parse_identity("bad: forall a in A . eps(a) = a"), SortError);
  // Declared variables appear on both sides.
  CHECK_THROWS_AS(parse_identity("bad: forall a in A, b in A . a = a"), SortError);
  // Legs are 1..k, each once, never mixed with unlegged uses.
  CHECK_THROWS_AS(parse_identity("bad: forall a in A . a(1) a(3) = a"), SortError);
  CHECK_THROWS_AS(parse_identity("bad: forall a in A . a(1) a = a"), SortError);
  CHECK_THROWS_AS(parse_identity("bad: forall a in A . lact(a) = a"), SortError);
}

TEST_CASE("corpus files split into blocks with line numbers") {
  const auto programs = parse_corpus(
      "# comment\n"
      "one: forall a in A . a one = a\n"
      "\n"
      "two: forall a in A .\n"
      "  one a = a\n");
  REQUIRE(programs.size() == 2);
  CHECK(programs[0].line == 2);
  CHECK(programs[1].line == 4);
  CHECK(programs[1].name == "two");
}

TEST_CASE("evaluation finds counterexamples") {
  const auto good = parse_identity("s4: forall a in A . S2(S2(S2(a))) = a");
  CHECK(evaluate(good, taft3()).pass);
  const auto bad = parse_identity("s2: forall a in A . S2(a) = a");
  const IdentityOutcome out = evaluate(bad, taft3());
  CHECK_FALSE(out.pass);
  CHECK(out.counterexample.find("a=") != std::string::npos);
}

TEST_CASE("sides are linear in every variable") {
  std::mt19937 rng(5);
  const PairedSystem& sys = taft3();
  const FieldSpec f = sys.primal()->field();
  const std::size_t n = sys.primal()->dim();
  const auto programs = read_corpus_dir(HOPFKIT_CORPUS_DIR);
  for (const auto& p : programs) {
    if (p.decls.empty()) continue;
    CAPTURE(p.name);
    std::map<std::string, Vec> u, v, w;
    for (const auto& d : p.decls) {
      u[d.var] = random_vec(f, n, rng);
      v[d.var] = u[d.var];
      w[d.var] = u[d.var];
    }
    const std::string var = p.decls[0].var;
    const Vec x = random_vec(f, n, rng), y = random_vec(f, n, rng);
    const Scalar c = Scalar::parse(f, "z - 2");
    u[var] = add(x, scale(c, y));
    v[var] = x;
    w[var] = y;
    for (bool left : {true, false}) {
      const Value vu = evaluate_side(p, left, sys, u);
      const Value vv = evaluate_side(p, left, sys, v);
      const Value vw = evaluate_side(p, left, sys, w);
      if (vu.sort == Sort::scalar)
        CHECK(vu.scalar == vv.scalar + c * vw.scalar);
      else
        CHECK(vu.coords == add(vv.coords, scale(c, vw.coords)));
    }
  }
}

TEST_CASE("the corpus agrees with the hard-coded checks") {
  const auto corpus = read_corpus_dir(HOPFKIT_CORPUS_DIR);
  for (const char* name : {"group_S3", "fun_Z6", "sweedler_H4", "taft_T3"}) {
    CAPTURE(name);
    const PairedSystem sys = PairedSystem::build(build_builtin(name));
    const Report hard = full_report(sys);
    const Report dsl = evaluate_corpus(corpus, sys);
    CHECK(dsl.results.size() == corpus.size());
    for (const auto& c : dsl.results) {
      CAPTURE(c.id);
      const CheckResult* ref = hard.find(c.id);
      REQUIRE(ref != nullptr);
      CHECK(ref->pass == c.pass);
    }
  }
}

TEST_CASE("the swapped Radford entry fails exactly where dhat^2 != eps") {
  const auto negative = read_corpus_dir(std::string(HOPFKIT_CORPUS_DIR) + "/negative");
  REQUIRE(negative.size() == 1);
  CHECK_FALSE(evaluate(negative[0], taft3()).pass);
  CHECK(evaluate(negative[0], PairedSystem::build(build_sweedler())).pass);
}
