#!/usr/bin/env python3
"""Independent computation of the modular data of Sweedler's algebra and the
Taft algebras T3, T4 with sympy.

The algebras are generated from g, x with g^n = 1, x^n = 0, xg = q gx,
Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x. The coproduct of g^i x^j is
obtained by multiplying out Delta(g)^i Delta(x)^j in A (x) A. Basis element
g^i x^j sits at index j * n + i. Scalars are printed as polynomials in the
primitive root z.

    oracle.py                 print the values as JSON
    oracle.py --check FILE    compare with a frozen JSON file
"""

import argparse
import json
import sys

import sympy as sp
from sympy.polys.matrices import DomainMatrix


class Algebra:
    def __init__(self, n, field, q):
        self.n = n
        self.dim = n * n
        self.K = field
        self.q = q
        self.mul = {}
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if j + l >= n:
                            continue
                        self.mul[(self.idx(i, j), self.idx(k, l))] = (
                            self.idx((i + k) % n, j + l), q ** (j * k))
        one = self.basis(0)
        g = self.basis(self.idx(1, 0))
        x = self.basis(self.idx(0, 1))
        dg = self.tensor(g, g)
        dx = self.add(self.tensor(x, one), self.tensor(g, x))
        self.comul = []
        for j in range(n):
            for i in range(n):
                t = self.tensor(one, one)
                for _ in range(i):
                    t = self.mul2(t, dg)
                for _ in range(j):
                    t = self.mul2(t, dx)
                self.comul.append(t)
        self.counit = [self.K.one if a // n == 0 else self.K.zero for a in range(self.dim)]
        ginv = self.basis(self.idx(n - 1, 0))
        s_x = self.scale(-self.K.one, self.multiply(ginv, x))
        cols = []
        for j in range(n):
            for i in range(n):
                v = self.basis(0)
                for _ in range(j):
                    v = self.multiply(v, s_x)
                for _ in range(i):
                    v = self.multiply(v, ginv)
                cols.append(v)
        self.S = DomainMatrix([[cols[c][r] for c in range(self.dim)] for r in range(self.dim)],
                              (self.dim, self.dim), self.K)

    def idx(self, i, j):
        return j * self.n + i

    def basis(self, a):
        return [self.K.one if b == a else self.K.zero for b in range(self.dim)]

    def add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def scale(self, c, u):
        return [c * a for a in u]

    def multiply(self, u, v):
        out = [self.K.zero] * self.dim
        for a in range(self.dim):
            if u[a] == self.K.zero:
                continue
            for b in range(self.dim):
                if v[b] == self.K.zero or (a, b) not in self.mul:
                    continue
                k, c = self.mul[(a, b)]
                out[k] += u[a] * v[b] * c
        return out

    def tensor(self, u, v):
        return [u[a] * v[b] for a in range(self.dim) for b in range(self.dim)]

    def mul2(self, s, t):
        d = self.dim
        out = [self.K.zero] * (d * d)
        for p in range(d * d):
            if s[p] == self.K.zero:
                continue
            for r in range(d * d):
                if t[r] == self.K.zero:
                    continue
                a, b = divmod(p, d)
                c, e = divmod(r, d)
                if (a, c) not in self.mul or (b, e) not in self.mul:
                    continue
                k1, c1 = self.mul[(a, c)]
                k2, c2 = self.mul[(b, e)]
                out[k1 * d + k2] += s[p] * t[r] * c1 * c2
        return out


def matrix(K, rows):
    return DomainMatrix(rows, (len(rows), len(rows[0])), K)


def left_integral(K, dim, comul, unit):
    # Row (i, j): e_j coordinate of (id (x) phi) Delta(e_i) - phi(e_i) 1.
    rows = []
    for i in range(dim):
        for j in range(dim):
            row = [K.zero] * dim
            for k in range(dim):
                row[k] += comul[i][j * dim + k]
            row[i] -= unit[j]
            rows.append(row)
    ns = matrix(K, rows).nullspace()
    assert ns.shape[0] == 1, "left integral space is not one-dimensional"
    phi = [ns[0, c].element for c in range(dim)]
    lead = next(c for c in phi if c != K.zero)
    return [c / lead for c in phi]


def solve_rows(K, a_rows, b):
    """Solves A x = b for square invertible A."""
    n = len(a_rows)
    aug = matrix(K, [list(a_rows[r]) + [b[r]] for r in range(n)])
    rref, pivots = aug.rref()
    assert list(pivots) == list(range(n)), "system is singular"
    return [rref[r, n].element for r in range(n)]


def modular(K, dim, mul_fn, comul, unit, S):
    phi = left_integral(K, dim, comul, unit)
    basis = [[K.one if b == a else K.zero for b in range(dim)] for a in range(dim)]
    gram = [[sum((c * p for c, p in zip(mul_fn(basis[i], basis[j]), phi)), K.zero)
             for j in range(dim)] for i in range(dim)]
    phi_s = [sum((phi[r] * S[r, c].element for r in range(dim)), K.zero) for c in range(dim)]
    delta = solve_rows(K, gram, phi_s)
    s2 = S * S
    phi_s2 = [sum((phi[r] * s2[r, c].element for r in range(dim)), K.zero) for c in range(dim)]
    k = next(i for i in range(dim) if phi[i] != K.zero)
    tau = phi_s2[k] / phi[k]
    assert all(phi_s2[i] == tau * phi[i] for i in range(dim))
    # phi(e_a e_b) = sum_k sigma(e_a)_k phi(e_b e_k): one system per column a.
    sigma_cols = [solve_rows(K, gram, [gram[a][b] for b in range(dim)]) for a in range(dim)]
    sigma = [[sigma_cols[c][r] for c in range(dim)] for r in range(dim)]
    return phi, delta, tau, sigma


def is_identity(M):
    n = M.shape[0]
    K = M.domain
    return all(M[r, c].element == (K.one if r == c else K.zero)
               for r in range(n) for c in range(n))


def order(M, limit=64):
    P = M
    for k in range(1, limit + 1):
        if is_identity(P):
            return k
        P = P * M
    return None


def fmt(K, c, var="z"):
    rep = [sp.Rational(int(x.numerator), int(x.denominator)) for x in c.to_list()]
    deg = len(rep) - 1
    parts = []
    for i, a in enumerate(rep):
        if a == 0:
            continue
        p = deg - i
        mag = abs(a)
        if p == 0:
            term = str(mag)
        else:
            mono = var if p == 1 else f"{var}^{p}"
            term = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(term if a > 0 else "-" + term)
        else:
            parts.append(("+ " if a > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def describe(name, n):
    if n == 2:
        K = sp.QQ.algebraic_field(sp.Integer(1))
        q = -K.one
    else:
        K = sp.QQ.algebraic_field(sp.exp(2 * sp.pi * sp.I / n))
        q = K.from_sympy(sp.exp(2 * sp.pi * sp.I / n))
    A = Algebra(n, K, q)
    d = A.dim
    unit = A.basis(0)
    phi, delta, tau, sigma = modular(K, d, A.multiply, A.comul, unit, A.S)

    # Dual: f_i f_j has f_k coefficient comul(k)[i, j]; Delta^(f_k) from mul.
    def dual_multiply(u, v):
        out = [K.zero] * d
        for k in range(d):
            out[k] = sum((A.comul[k][i * d + j] * u[i] * v[j]
                          for i in range(d) for j in range(d)
                          if u[i] != K.zero and v[j] != K.zero), K.zero)
        return out

    dual_comul = []
    for k in range(d):
        t = [K.zero] * (d * d)
        for (a, b), (kk, c) in A.mul.items():
            if kk == k:
                t[a * d + b] += c
        dual_comul.append(t)
    dual_unit = list(A.counit)
    dual_S = A.S.transpose()
    _, delta_hat, tau_hat, _ = modular(K, d, dual_multiply, dual_comul, dual_unit, dual_S)

    def f(v):
        return [fmt(K, c) for c in v]

    return {
        "name": name,
        "phi": f(phi),
        "delta": f(delta),
        "tau": fmt(K, tau),
        "sigma": [f(row) for row in sigma],
        "delta_hat": f(delta_hat),
        "tau_hat": fmt(K, tau_hat),
        "antipode_order": order(A.S),
        "antipode_square_is_identity": is_identity(A.S * A.S),
    }


def compute():
    return {
        "sweedler_H4": describe("sweedler_H4", 2),
        "taft_T3": describe("taft_T3", 3),
        "taft_T4": describe("taft_T4", 4),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", metavar="FILE")
    args = parser.parse_args()
    values = compute()
    if args.check:
        with open(args.check) as fh:
            frozen = json.load(fh)
        if frozen != values:
            print("oracle values differ from " + args.check)
            print(json.dumps(values, indent=2, sort_keys=True))
            return 1
        print("oracle values match " + args.check)
        return 0
    print(json.dumps(values, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
