"""Integer lattices: Hermite and Smith normal forms, kernels, preimages, subquotients.

Vectors are tuples of ints.  A matrix is a list of rows and acts on column
vectors, ``M @ x``.  Matrices with Fraction entries are allowed where the
result is integral on the lattice they are applied to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Vector = tuple
Matrix = list


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Matrix, ncols: int | None = None) -> Matrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*M)]


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def apply(M: Matrix, x: Sequence, out_dim: int | None = None) -> Vector:
    if not M:
        return (0,) * (out_dim or 0)
    return tuple(sum(a * b for a, b in zip(row, x)) for row in M)


def as_int(v) -> Vector:
    out = []
    for a in v:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"non-integral entry {a}")
        out.append(int(a))
    return tuple(out)


# -- Hermite normal form ------------------------------------------------------------------


def hnf_rows(gens: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Row-style Hermite basis of the lattice spanned by ``gens`` in Z^n.

    Pivots are positive, entries above a pivot are reduced into ``[0, pivot)``.
    Equal lattices get identical bases.
    """
    rows = [list(g) for g in gens if any(g)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                if r[col]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        if nz:
            p = nz[0]
            if p[col] < 0:
                p = [-a for a in p]
            basis.append(p)
        rows = [r for r in rest if any(r)]
        col += 1
    # reduce above pivots
    for i, b in enumerate(basis):
        pc = next(k for k, a in enumerate(b) if a)
        for r in range(i):
            q = basis[r][pc] // b[pc]
            if q:
                basis[r] = [a - q * c for a, c in zip(basis[r], b)]
    return [tuple(b) for b in basis]


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int) -> bool:
    return hnf_rows(a, n) == hnf_rows(b, n)


def contains(basis_gens: Sequence[Sequence[int]], v: Sequence[int], n: int) -> bool:
    return same_lattice(list(basis_gens) + [tuple(v)], basis_gens, n)


# -- Smith normal form ----------------------------------------------------------------------


@dataclass
class Smith:
    """``U @ M @ V = D`` with ``U``, ``V`` unimodular and ``D`` diagonal (divisibility chain)."""

    diag: list[int]
    U: Matrix
    V: Matrix
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith(M: Matrix, rows: int | None = None, cols: int | None = None) -> Smith:
    r = len(M) if rows is None else rows
    c = (len(M[0]) if M else 0) if cols is None else cols
    A = [list(map(int, row)) for row in M] if M else zeros(r, c)
    U, V = identity(r), identity(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    t = 0
    while t < min(r, c):
        # pick the smallest nonzero entry in the remaining block as pivot
        piv = None
        for i in range(t, r):
            for j in range(t, c):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % A[t][t]), None)
                if bad is not None:
                    add_row(t, bad[0], -1)
                    done = False
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = [A[i][i] for i in range(min(r, c))]
    return Smith(diag, U, V, r, c)


def invert_unimodular(U: Matrix) -> Matrix:
    n = len(U)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U)]
    for col in range(n):
        p = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[p] = A[p], A[col]
        pv = A[col][col]
        A[col] = [a / pv for a in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                q = A[i][col]
                A[i] = [a - q * b for a, b in zip(A[i], A[col])]
    return [[int(a) for a in row[n:]] for row in A]


# -- kernels, images, preimages ---------------------------------------------------------------


def kernel(M: Matrix, cols: int) -> list[Vector]:
    """Basis of ``{x in Z^cols : M @ x = 0}``."""
    if cols == 0:
        return []
    if not M:
        return [tuple(r) for r in identity(cols)]
    S = smith(M, len(M), cols)
    k = S.rank
    return [tuple(S.V[i][j] for i in range(cols)) for j in range(k, cols)]


def image(M: Matrix, domain: Sequence[Sequence], out_dim: int) -> list[Vector]:
    """Generators of ``M(L)`` for the lattice ``L`` spanned by ``domain``."""
    return [as_int(apply(M, v, out_dim)) for v in domain]


def preimage(M: Matrix, domain: Sequence[Sequence[int]], target: Sequence[Sequence[int]], in_dim: int, out_dim: int) -> list[Vector]:
    """Basis of ``{x in L : M @ x in T}`` for lattices ``L`` (spanned by ``domain``) and ``T``."""
    dom = hnf_rows(domain, in_dim)
    tgt = hnf_rows(target, out_dim)
    if not dom:
        return []
    # columns: M(d_1) .. M(d_k), -t_1 .. -t_m
    images = [as_int(apply(M, d, out_dim)) for d in dom]
    cols = images + [tuple(-a for a in t) for t in tgt]
    big = transpose([list(c) for c in cols], len(cols)) if out_dim else []
    ker = kernel(big, len(cols)) if out_dim else [tuple(r) for r in identity(len(cols))]
    out = []
    for v in ker:
        x = [0] * in_dim
        for coef, d in zip(v[: len(dom)], dom):
            for i, a in enumerate(d):
                x[i] += coef * a
        out.append(tuple(x))
    return hnf_rows(out, in_dim)


def intersect(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int) -> list[Vector]:
    return preimage(identity(n), a, b, n, n)


def scaled(gens: Sequence[Sequence[int]], c: int) -> list[Vector]:
    return [tuple(c * x for x in g) for g in gens]


def standard(n: int, c: int = 1) -> list[Vector]:
    return [tuple(c * int(i == j) for j in range(n)) for i in range(n)]


# -- finitely generated abelian groups -------------------------------------------------------


@dataclass(frozen=True)
class FinAbGroup:
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tors = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in tors):
            raise ValueError("invariant factors must be at least 2")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "FinAbGroup":
        text = text.strip()
        if text == "0":
            return cls()
        rank, tors = 0, []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                rank += 1
            elif part.startswith("Z^"):
                rank += int(part[2:])
            elif part.startswith("Z/"):
                tors.append(int(part[2:]))
            else:
                raise ValueError(f"bad group term {part!r}")
        return cls(rank, tuple(sorted(tors)))


@dataclass
class Subquotient:
    """``A / B`` for lattices ``B <= A <= Z^n``, with coordinates in Smith form.

    ``coords(v)`` returns the class of ``v in A`` as a tuple whose first
    entries live in ``Z/d_i`` (the torsion part) followed by free coordinates.
    """

    A: list
    B: list
    n: int
    group: FinAbGroup = field(init=False)

    def __post_init__(self):
        self.A = hnf_rows(self.A, self.n)
        self.B = hnf_rows(self.B, self.n)
        k = len(self.A)
        rel = []
        for b in self.B:
            x = self._solve(b)
            if x is None:
                raise ValueError("B is not contained in A")
            rel.append(list(x))
        # rows of rel are relations in A-coordinates (row vectors): x -> x @ V
        S = smith(rel, len(rel), k) if rel else Smith([], [], identity(k), 0, k)
        self._V = S.V
        diag = [d for d in S.diag if d]
        self._mods = diag + [0] * (k - len(diag))
        self._keep = [i for i, d in enumerate(self._mods) if d != 1]
        tors = tuple(d for d in diag if d > 1)
        self.group = FinAbGroup(k - len(diag), tors)
        self._Vinv = invert_unimodular(self._V) if k else []

    def _solve(self, v: Sequence[int]) -> Vector | None:
        """Coefficients of ``v`` in the Hermite basis of ``A``, or None."""
        v = list(v)
        x = []
        for b in self.A:
            pc = next(i for i, a in enumerate(b) if a)
            if v[pc] % b[pc]:
                return None
            q = v[pc] // b[pc]
            x.append(q)
            v = [a - q * c for a, c in zip(v, b)]
        if any(v):
            return None
        return tuple(x)

    def contains(self, v: Sequence[int]) -> bool:
        return self._solve(v) is not None

    def coords(self, v: Sequence[int]) -> Vector:
        x = self._solve(as_int(v))
        if x is None:
            raise ValueError(f"{tuple(v)} is not in the lattice A")
        y = [sum(x[i] * self._V[i][j] for i in range(len(x))) for j in range(len(x))]
        out = []
        for j in self._keep:
            d = self._mods[j]
            out.append(y[j] % d if d else y[j])
        return tuple(out)

    def is_zero_class(self, v: Sequence[int]) -> bool:
        return all(c == 0 for c in self.coords(v))

    def generators(self) -> list[Vector]:
        """Representatives in Z^n of the Smith generators, in coordinate order."""
        out = []
        for j in self._keep:
            row = self._Vinv[j]
            out.append(tuple(sum(row[i] * self.A[i][m] for i in range(len(self.A))) for m in range(self.n)))
        return out

    def lift(self, coords: Sequence[int]) -> Vector:
        gens = self.generators()
        out = [0] * self.n
        for c, g in zip(coords, gens):
            for m in range(self.n):
                out[m] += c * g[m]
        return tuple(out)


def image_sub(M: Matrix, src: Subquotient, dst: Subquotient) -> list[Vector]:
    """Lattice in ``dst``'s ambient space representing ``im(M) + B_dst``."""
    return hnf_rows(image(M, src.A, dst.n) + list(dst.B), dst.n)


def kernel_sub(M: Matrix, src: Subquotient, dst: Subquotient) -> list[Vector]:
    """Lattice ``{x in A_src : M x in B_dst}`` (contains ``B_src`` when M is well defined)."""
    return preimage(M, src.A, dst.B, src.n, dst.n)


def is_exact_at(f: Matrix, g: Matrix, G1: Subquotient, G2: Subquotient, G3: Subquotient) -> bool:
    """``im(f) = ker(g)`` inside ``G2``."""
    return same_lattice(image_sub(f, G1, G2), hnf_rows(kernel_sub(g, G2, G3) + list(G2.B), G2.n), G2.n)


def is_well_defined(M: Matrix, src: Subquotient, dst: Subquotient) -> bool:
    """``M`` maps ``A_src`` into ``A_dst`` and ``B_src`` into ``B_dst``."""
    try:
        ok_a = all(dst.contains(v) for v in image(M, src.A, dst.n))
        ok_b = all(contains(dst.B, v, dst.n) for v in image(M, src.B, dst.n))
    except ValueError:
        return False
    return ok_a and ok_b
