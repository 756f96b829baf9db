#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/duality.hpp"

namespace hopf {

// Identity language over a paired system:
//
//   identity := name ":" "forall" decl {"," decl} "." expr "=" expr
//   decl     := var "in" ("A" | "Ahat")
//   expr     := term {["*"] term}              juxtaposition is a product
//   term     := scalar | var ["(" digit ")"] | fn "(" expr {"," expr} ")"
//             | "<" expr "," expr ">" | "(" expr ")" | const
//   scalar   := ["-"] digits ["/" digits]
//
// Unary functions S, Sinv, S2, Sinv2, sigma, sigmainv, sigmap, sigmapinv,
// eps, phi, psi act on either side (on A^ they are the dual-side maps).
// lact(a, y) = a -> y, ract(y, a) = y <- a, lacthat(y, a) = y -> a,
// racthat(a, y) = a <- y. Constants: one, delta, deltainv (in A), onehat,
// dhat, dhatinv (in A^), tau, tauhat (scalars).
//
// A legged variable a(1), ..., a(k) stands for the (k-1)-fold coproduct of a;
// on each side a variable is either used without legs or with legs 1..k,
// each exactly once. Free variables range over basis elements, so an
// identity is meaningful for general elements only when each side is linear
// in every variable.
enum class Sort { element, dual_element, scalar };

std::string_view sort_name(Sort s);

struct Expr {
  enum class Kind { variable, constant, scalar, call, product, pairing };
  Kind kind = Kind::scalar;
  std::string name;  // variable, constant or function name; scalar literal text
  unsigned leg = 0;  // Sweedler leg of a variable; 0 when unlegged
  std::vector<Expr> args;
  std::size_t line = 0;
  std::size_t column = 0;

  bool operator==(const Expr& other) const;
};

struct Declaration {
  std::string var;
  Sort sort = Sort::element;
  bool operator==(const Declaration&) const = default;
};

struct IdentityProgram {
  std::string name;
  std::vector<Declaration> decls;
  Expr lhs;
  Expr rhs;
  std::size_t line = 0;  // first line of the block in its source

  bool operator==(const IdentityProgram& other) const;
};

// Parses one identity and sort-checks it. Throws SyntaxError with a position
// or SortError naming the offending subterm.
IdentityProgram parse_identity(std::string_view text, std::size_t first_line = 1);

// A corpus file: blank-line separated blocks, one identity per block, "#"
// starts a comment.
std::vector<IdentityProgram> parse_corpus(std::string_view text);
std::vector<IdentityProgram> read_corpus_file(const std::filesystem::path& path);
// All *.hid files of a directory in name order.
std::vector<IdentityProgram> read_corpus_dir(const std::filesystem::path& dir);

// Canonical text that parses back to an equal program.
std::string to_string(const Expr& e);
std::string to_string(const IdentityProgram& p);

// Result of an expression: a scalar, or coordinates in A or A^.
struct Value {
  Sort sort = Sort::scalar;
  Vec coords;     // element or dual_element
  Scalar scalar;  // scalar sort

  bool operator==(const Value& other) const;
  std::string to_string() const;
};

struct IdentityOutcome {
  std::string name;
  bool pass = true;
  std::string counterexample;  // assignment and both sides, empty on pass
};

// Checks the identity for every assignment of basis elements to the free
// variables.
IdentityOutcome evaluate(const IdentityProgram& prog, const PairedSystem& sys);

// One side of the identity at an arbitrary assignment of coordinates to the
// declared variables.
Value evaluate_side(const IdentityProgram& prog, bool left, const PairedSystem& sys,
                    const std::map<std::string, Vec>& assignment);

// Outcomes of a whole corpus, rendered like verification reports.
Report evaluate_corpus(const std::vector<IdentityProgram>& corpus, const PairedSystem& sys);

}  // namespace hopf
