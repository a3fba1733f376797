"""Bigraded I^j-cohomology, Chow and Chow-Witt tables of cellular varieties.

For a cellular variety with real points ``X(R)`` put ``A_i = H^i(X(R), Z(L))``
and ``h_i = H^i(X(R), Z/2)``.  The I^j-cohomology is ``A_i`` for ``j >= i`` and
the subgroup ``2 A_i`` for ``j < i``; the cohomology of ``I^j / I^{j+1}`` is
``h_i`` for ``j >= i`` and 0 otherwise.  All groups are realized as lattice
subquotients of the cellular cochains, so the comparison maps are plain
matrices and exactness is checked on lattices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InconsistentTable
from .complexes import CellularVariety, bockstein_matrix, coboundaries, cocycles, cohomology
from .lattice import (
    FinAbGroup,
    Matrix,
    Subquotient,
    hnf_rows,
    identity,
    is_exact_at,
    is_well_defined,
    preimage,
    same_lattice,
    scaled,
    standard,
)

SYSTEMS = ("Z", "ZL")


@dataclass
class BigradedTable:
    name: str
    dim: int
    jmax: int
    I: dict = field(default_factory=dict)  # (i, j, L) -> Subquotient
    Ibar: dict = field(default_factory=dict)  # (i, j) -> Subquotient
    to_lower: dict = field(default_factory=dict)  # (i, j, L): H^i(I^{j+1}) -> H^i(I^j)
    reduction: dict = field(default_factory=dict)  # (i, j, L): H^i(I^j) -> H^i(Ibar^j)
    connecting: dict = field(default_factory=dict)  # (i, j, L): H^i(Ibar^j) -> H^{i+1}(I^{j+1})

    def group(self, i: int, j: int, L: str = "Z") -> FinAbGroup:
        return self.I[(i, min(j, self.jmax), L)].group

    def bar_group(self, i: int, j: int) -> FinAbGroup:
        return self.Ibar[(i, min(j, self.jmax))].group

    def rows(self) -> list[tuple]:
        out = []
        for L in SYSTEMS:
            for i in range(self.dim + 1):
                for j in range(self.jmax + 1):
                    out.append((L, i, j, str(self.group(i, j, L)), str(self.bar_group(i, j))))
        return out

    def to_tsv(self) -> str:
        lines = ["L\ti\tj\tI^j(L)\tIbar^j"]
        lines += ["\t".join(str(x) for x in r) for r in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "entries": [{"L": L, "i": i, "j": j, "I": g, "Ibar": b} for L, i, j, g, b in self.rows()],
        }


def _sub(A, B, n) -> Subquotient:
    return Subquotient(list(A), list(B), n)


def derive_I_table(X: CellularVariety, check: bool = True) -> BigradedTable:
    """Assemble ``H^i(X, I^j(L))`` for ``0 <= j <= dim + 1`` and validate the Bar sequences."""
    spec = X.spec
    N = spec.dim
    jmax = N + 1
    T = BigradedTable(X.name, N, jmax)
    n = spec.cells
    for i in range(N + 1):
        z2, b2 = cocycles(spec, "Z2", i), coboundaries(spec, "Z2", i)
        for j in range(jmax + 1):
            T.Ibar[(i, j)] = _sub(z2, b2, n[i]) if j >= i else _sub(standard(n[i]), standard(n[i]), n[i])
        for L in SYSTEMS:
            z, b = cocycles(spec, L, i), coboundaries(spec, L, i)
            full = _sub(z, b, n[i])
            doubled = _sub(hnf_rows(scaled(z, 2) + list(b), n[i]), b, n[i])
            for j in range(jmax + 1):
                T.I[(i, j, L)] = full if j >= i else doubled
    eye = {i: identity(n[i]) for i in range(N + 1)}
    two = {i: [[2 * a for a in row] for row in eye[i]] for i in range(N + 1)}
    for L in SYSTEMS:
        for i in range(N + 1):
            for j in range(jmax + 1):
                # the inclusion I^{j+1} -> I^j, normalized: doubling until the stable range ends
                T.to_lower[(i, j, L)] = two[i] if j + 1 >= i else eye[i]
                T.reduction[(i, j, L)] = eye[i]
                if j >= i:
                    T.connecting[(i, j, L)] = bockstein_matrix(spec, L, i)
                else:
                    T.connecting[(i, j, L)] = [[0] * n[i] for _ in range(n[i + 1] if i < N else 0)]
    if check:
        validate_bar(T)
    return T


def validate_bar(T: BigradedTable) -> None:
    """Check exactness of ``... -> H^i(I^{j+1}) -> H^i(I^j) -> H^i(Ibar^j) -> H^{i+1}(I^{j+1}) -> ...``."""
    N = T.dim
    for L in SYSTEMS:
        for j in range(T.jmax):
            seq = []  # (group, map to next)
            for i in range(N + 1):
                seq.append((T.I[(i, j + 1, L)], T.to_lower[(i, j, L)]))
                seq.append((T.I[(i, j, L)], T.reduction[(i, j, L)]))
                nxt = T.connecting[(i, j, L)] if i < N else None
                seq.append((T.Ibar[(i, j)], nxt))
            for k, (G, f) in enumerate(seq):
                if f is not None and not is_well_defined(f, G, seq[k + 1][0]):
                    raise InconsistentTable(f"InconsistentTable: ill-defined map at position {k} (L={L}, j={j})")
            for k, (G, f) in enumerate(seq):
                prev = seq[k - 1] if k else None
                if prev is None:
                    # 0 -> H^0(I^{j+1}) injective
                    ker = preimage(f, G.A, seq[k + 1][0].B, G.n, seq[k + 1][0].n)
                    ok = same_lattice(hnf_rows(ker + list(G.B), G.n), G.B, G.n)
                elif f is None:
                    # last map: H^N(I^j) -> H^N(Ibar^j) surjective
                    ok = same_lattice(hnf_rows(_images(prev[1], prev[0], G), G.n), G.A, G.n)
                else:
                    ok = is_exact_at(prev[1], f, prev[0], G, seq[k + 1][0])
                if not ok:
                    raise InconsistentTable(f"InconsistentTable: Bar sequence not exact at position {k} (L={L}, j={j})")


def _images(f: Matrix, src: Subquotient, dst: Subquotient) -> list:
    from .lattice import image

    return image(f, src.A, dst.n) + list(dst.B)


def dichotomy_values(T: BigradedTable, i: int, L: str) -> list[FinAbGroup]:
    """Distinct values of ``H^i(I^j(L))`` over ``j``."""
    out: list[FinAbGroup] = []
    for j in range(T.jmax + 1):
        g = T.group(i, j, L)
        if g not in out:
            out.append(g)
    return out


def chow_tables(X: CellularVariety) -> tuple[list[FinAbGroup], list[FinAbGroup]]:
    """``CH^n`` free on the codimension-n cells, ``Ch^n = H^n(X(R), Z/2)``."""
    CH = [FinAbGroup(c) for c in X.codim_cells]
    Ch = cohomology(X.spec, "Z2")
    return CH, Ch


@dataclass
class ChowWittEntry:
    n: int
    L: str
    group: FinAbGroup
    lattice: Subquotient  # inside Z^{c_n} x Z^{c_n}: (cocycle for I^n(L), cycle in CH^n)
    kernel_rank: int
    witt_part: FinAbGroup
    projection_surjective: bool
    injective: bool


def chow_witt_table(X: CellularVariety, L: str = "Z") -> list[ChowWittEntry]:
    """``H^n(I^n(L)) x_{Ch^n} ker(d: CH^n -> H^{n+1}(I^{n+1}(L)))`` for every ``n``.

    CH^n is identified with integral n-cochains (one generator per cell), the
    map to Ch^n is reduction mod 2 and ``d`` is the Bockstein of the reduction.
    """
    spec = X.spec
    out = []
    for n in range(spec.dim + 1):
        c = spec.cells[n]
        if X.codim_cells and len(X.codim_cells) > n and X.codim_cells[n] != c:
            raise InconsistentTable(f"codimension-{n} cells do not match the {n}-cells of the real locus")
        zl, bl = cocycles(spec, L, n), coboundaries(spec, L, n)
        if not same_lattice(cocycles(spec, "Z2", n), standard(c), c):
            raise InconsistentTable(f"mod-2 coboundary out of degree {n} must vanish for a cellular variety")
        if n < spec.dim:
            nxt_b = coboundaries(spec, L, n + 1)
            K = preimage(bockstein_matrix(spec, L, n), standard(c), nxt_b, c, spec.cells[n + 1])
        else:
            K = standard(c)
        b2 = coboundaries(spec, "Z2", n)
        # pairs (z, x) with z in Z_L, x in K and z - x in B(Z/2)
        dom = [tuple(v) + (0,) * c for v in zl] + [(0,) * c + tuple(v) for v in K]
        diff = [[int(r == k) - int(r + c == k) for k in range(2 * c)] for r in range(c)]
        pairs = preimage(diff, dom, b2, 2 * c, c)
        rel = [tuple(v) + (0,) * c for v in bl]
        sq = Subquotient(pairs, rel, 2 * c)
        # projection onto the CH factor hits all of K
        proj = hnf_rows([tuple(v[c:]) for v in sq.A], c)
        surjective = same_lattice(proj, K, c)
        witt = Subquotient(zl, bl, c).group
        out.append(ChowWittEntry(n, L, sq.group, sq, len(K), witt, surjective, True))
    return out
