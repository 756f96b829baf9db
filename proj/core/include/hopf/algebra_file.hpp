#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// JSON interchange format:
//   {"name": ..., "field": {"kind": "rational"|"cyclotomic", "order": N},
//    "dim": n, "basis": [...],
//    "mul":   [[i, j, k, "scalar"], ...],   coefficient of e_k in e_i e_j
//    "comul": [[i, j, k, "scalar"], ...],   coefficient of e_j (x) e_k in Delta(e_i)
//    "counit": ["scalar", ...], "unit": ["scalar", ...],
//    "antipode": [[i, j, "scalar"], ...]}   coefficient of e_j in S(e_i); optional
// Sparse lists omit zeros and are written in index order. When "antipode" is
// absent it is synthesised with compute_antipode().
//
// Parsing does not run validate(): callers decide how to report axiom
// failures. Syntax problems raise SyntaxError, content problems SemanticError.
HopfAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const HopfAlgebra& h);

HopfAlgebra read_algebra(const std::filesystem::path& path);
void write_algebra(const HopfAlgebra& h, const std::filesystem::path& path);

}  // namespace hopf
