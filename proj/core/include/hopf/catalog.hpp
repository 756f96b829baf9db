#pragma once

#include <string>
#include <vector>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// A finite group given by its multiplication table.
struct GroupPresentation {
  std::string name;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of ab
  std::size_t identity = 0;

  std::size_t order() const { return table.size(); }
  std::size_t inverse(std::size_t a) const;
  // Throws InvalidAlgebra unless the table is a group with `identity` as
  // its neutral element.
  void validate() const;

  static GroupPresentation cyclic(std::size_t n);
  // S3 as permutations of {0,1,2}; element 0 is the identity.
  static GroupPresentation symmetric3();
  // Builds a presentation from a table, locating the identity.
  static GroupPresentation from_table(std::string name,
                                      std::vector<std::vector<std::size_t>> table);
};

// kG with Delta(e_g) = e_g (x) e_g and S(e_g) = e_{g^-1}.
HopfAlgebra build_group_algebra(const GroupPresentation& g,
                                const FieldSpec& field = FieldSpec::rational());

// K(G): pointwise product on the indicator basis p_g, Delta(f)(p, q) = f(pq).
HopfAlgebra build_function_algebra(const GroupPresentation& g,
                                   const FieldSpec& field = FieldSpec::rational());

// Sweedler's four-dimensional algebra on the basis 1, g, x, gx.
HopfAlgebra build_sweedler();

// Taft algebra T_n(zeta) over Q(zeta_n), basis g^i x^j at index j * n + i.
// Throws Error for n < 2.
HopfAlgebra build_taft(unsigned n);

// The fixed list of builtin algebras used by the acceptance suite and the
// CLI, in a stable order.
std::vector<std::string> builtin_names();
HopfAlgebra build_builtin(const std::string& name);
GroupPresentation builtin_group(const std::string& name);

}  // namespace hopf
