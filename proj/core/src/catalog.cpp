#include "hopf/catalog.hpp"

#include <array>
#include <map>

#include "hopf/errors.hpp"

namespace hopf {

std::size_t GroupPresentation::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (table[a][b] == identity) return b;
  throw InvalidAlgebra(name + ": element " + std::to_string(a) + " has no inverse");
}

void GroupPresentation::validate() const {
  const std::size_t n = order();
  if (n == 0) throw InvalidAlgebra(name + ": empty group");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidAlgebra(name + ": table is not square");
    for (std::size_t v : row)
      if (v >= n) throw InvalidAlgebra(name + ": table entry out of range");
  }
  if (identity >= n) throw InvalidAlgebra(name + ": identity out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw InvalidAlgebra(name + ": element " + std::to_string(identity) + " is not neutral");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidAlgebra(name + ": table is not associative at (" + std::to_string(a) +
                               ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = inverse(a);
    if (table[b][a] != identity)
      throw InvalidAlgebra(name + ": element " + std::to_string(a) + " has no two-sided inverse");
  }
}

GroupPresentation GroupPresentation::cyclic(std::size_t n) {
  if (n == 0) throw InvalidAlgebra("cyclic group of order 0");
  GroupPresentation g{"Z" + std::to_string(n), {}, 0};
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

GroupPresentation GroupPresentation::symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                   {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const Perm& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return i;
    throw Error("permutation not found");
  };
  GroupPresentation g{"S3", {}, 0};
  g.table.assign(6, std::vector<std::size_t>(6));
  // (pq)(i) = p(q(i))
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = index_of(c);
    }
  return g;
}

GroupPresentation GroupPresentation::from_table(std::string name,
                                                std::vector<std::vector<std::size_t>> table) {
  GroupPresentation g{std::move(name), std::move(table), 0};
  bool found = false;
  for (std::size_t e = 0; e < g.order() && !found; ++e) {
    bool neutral = true;
    for (std::size_t a = 0; a < g.order() && neutral; ++a)
      neutral = g.table[e].size() == g.order() && g.table[e][a] == a &&
                g.table[a].size() == g.order() && g.table[a][e] == a;
    if (neutral) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw InvalidAlgebra(g.name + ": table has no identity element");
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------

namespace {

Bialgebra empty_bialgebra(std::string name, const FieldSpec& field,
                          std::vector<std::string> basis) {
  const std::size_t n = basis.size();
  return Bialgebra{std::move(name), field, std::move(basis), Tensor3(field, n),
                   zero_vec(field, n),  Tensor3(field, n), zero_vec(field, n)};
}

}  // namespace

HopfAlgebra build_group_algebra(const GroupPresentation& g, const FieldSpec& field) {
  g.validate();
  const std::size_t n = g.order();
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back("g" + std::to_string(i));
  Bialgebra d = empty_bialgebra("group_" + g.name, field, std::move(basis));
  const Scalar one = Scalar::one(field);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) d.mul(a, b, g.table[a][b]) = one;
    d.comul(a, a, a) = one;
    d.counit[a] = one;
  }
  d.unit[g.identity] = one;
  Matrix s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = one;
  return HopfAlgebra(std::move(d), std::move(s));
}

HopfAlgebra build_function_algebra(const GroupPresentation& g, const FieldSpec& field) {
  g.validate();
  const std::size_t n = g.order();
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back("p" + std::to_string(i));
  Bialgebra d = empty_bialgebra("fun_" + g.name, field, std::move(basis));
  const Scalar one = Scalar::one(field);
  for (std::size_t a = 0; a < n; ++a) {
    d.mul(a, a, a) = one;
    d.unit[a] = one;
    for (std::size_t b = 0; b < n; ++b) d.comul(g.table[a][b], a, b) = one;
  }
  d.counit[g.identity] = one;
  Matrix s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = one;
  return HopfAlgebra(std::move(d), std::move(s));
}

HopfAlgebra build_sweedler() {
  const FieldSpec q = FieldSpec::rational();
  enum { kOne = 0, kG = 1, kX = 2, kGX = 3 };
  Bialgebra d = empty_bialgebra("sweedler_H4", q, {"1", "g", "x", "gx"});
  auto set_mul = [&](int a, int b, int c, long v) { d.mul(a, b, c) = Scalar(q, v); };
  for (int b = 0; b < 4; ++b) set_mul(kOne, b, b, 1);
  set_mul(kG, kOne, kG, 1);
  set_mul(kG, kG, kOne, 1);
  set_mul(kG, kX, kGX, 1);
  set_mul(kG, kGX, kX, 1);
  set_mul(kX, kOne, kX, 1);
  set_mul(kX, kG, kGX, -1);
  set_mul(kGX, kOne, kGX, 1);
  set_mul(kGX, kG, kX, -1);

  auto set_comul = [&](int a, int l, int r, long v) { d.comul(a, l, r) = Scalar(q, v); };
  set_comul(kOne, kOne, kOne, 1);
  set_comul(kG, kG, kG, 1);
  set_comul(kX, kX, kOne, 1);
  set_comul(kX, kG, kX, 1);
  set_comul(kGX, kGX, kG, 1);
  set_comul(kGX, kOne, kGX, 1);

  d.unit[kOne] = Scalar::one(q);
  d.counit[kOne] = Scalar::one(q);
  d.counit[kG] = Scalar::one(q);

  Matrix s(q, 4, 4);
  s(kOne, kOne) = Scalar(q, 1L);
  s(kG, kG) = Scalar(q, 1L);
  s(kGX, kX) = Scalar(q, -1L);
  s(kX, kGX) = Scalar(q, 1L);
  return HopfAlgebra(std::move(d), std::move(s));
}

namespace {

std::string taft_name(unsigned i, unsigned j) {
  std::string s;
  if (i >= 1) s += i == 1 ? "g" : "g^" + std::to_string(i);
  if (j >= 1) s += j == 1 ? "x" : "x^" + std::to_string(j);
  return s.empty() ? "1" : s;
}

}  // namespace

HopfAlgebra build_taft(unsigned n) {
  if (n < 2) throw Error("Taft algebra needs n >= 2");
  const FieldSpec field = FieldSpec::cyclotomic(n);
  const Scalar zeta = Scalar::root_of_unity(field, n);
  auto idx = [n](unsigned i, unsigned j) -> std::size_t { return j * n + i; };

  std::vector<std::string> basis(n * n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) basis[idx(i, j)] = taft_name(i, j);
  Bialgebra d = empty_bialgebra("taft_T" + std::to_string(n), field, std::move(basis));

  // (g^i x^j)(g^k x^l) = zeta^{jk} g^{i+k} x^{j+l}, zero once j + l >= n.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
          if (j + l >= n) continue;
          d.mul(idx(i, j), idx(k, l), idx((i + k) % n, j + l)) = zeta.pow(long(j * k % n));
        }

  // Gaussian binomials [j, k]_zeta via [j, k] = [j-1, k-1] + zeta^k [j-1, k].
  std::vector<std::vector<Scalar>> qbinom(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (unsigned j = 0; j < n; ++j) {
    qbinom[j][0] = Scalar::one(field);
    for (unsigned k = 1; k <= j; ++k) {
      qbinom[j][k] = qbinom[j - 1][k - 1];
      if (k <= j - 1) qbinom[j][k] += zeta.pow(k) * qbinom[j - 1][k];
    }
  }
  // Delta(g^i x^j) = sum_k [j, k] g^{i+k} x^{j-k} (x) g^i x^k.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k <= j; ++k)
        d.comul(idx(i, j), idx((i + k) % n, j - k), idx(i, k)) = qbinom[j][k];

  d.unit[idx(0, 0)] = Scalar::one(field);
  for (unsigned i = 0; i < n; ++i) d.counit[idx(i, 0)] = Scalar::one(field);

  // S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^{n-1}, S(x) = -g^{n-1} x.
  const StructureOps ops(d);
  const std::size_t dim = n * n;
  Vec s_g = unit_vec(field, dim, idx(n - 1, 0));
  Vec s_x = scale(Scalar(field, -1L), unit_vec(field, dim, idx(n - 1, 1)));
  std::vector<Vec> cols(dim);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Vec v = d.unit;
      for (unsigned t = 0; t < j; ++t) v = ops.multiply(v, s_x);
      for (unsigned t = 0; t < i; ++t) v = ops.multiply(v, s_g);
      cols[idx(i, j)] = std::move(v);
    }
  return HopfAlgebra(std::move(d), Matrix::from_columns(field, dim, cols));
}

// ---------------------------------------------------------------------------

std::vector<std::string> builtin_names() {
  return {"group_Z2", "group_Z6", "group_S3", "fun_Z2",  "fun_Z6",
          "fun_S3",   "sweedler_H4", "taft_T2", "taft_T3", "taft_T4"};
}

GroupPresentation builtin_group(const std::string& name) {
  if (name == "S3") return GroupPresentation::symmetric3();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t pos = 0;
    const unsigned long n = std::stoul(name.substr(1), &pos);
    if (pos + 1 == name.size() && n >= 1) return GroupPresentation::cyclic(n);
  }
  throw Error("unknown group \"" + name + "\" (expected Z<n> or S3)");
}

HopfAlgebra build_builtin(const std::string& name) {
  if (name.rfind("group_", 0) == 0) return build_group_algebra(builtin_group(name.substr(6)));
  if (name.rfind("fun_", 0) == 0) return build_function_algebra(builtin_group(name.substr(4)));
  if (name == "sweedler_H4" || name == "sweedler") return build_sweedler();
  if (name.rfind("taft_T", 0) == 0) return build_taft(std::stoul(name.substr(6)));
  throw Error("unknown builtin algebra \"" + name + "\"");
}

}  // namespace hopf
