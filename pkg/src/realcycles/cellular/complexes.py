"""Cellular cochain complexes with coefficients in Z, a twisted Z(L), and Z/2."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import NotAComplex
from .lattice import (
    FinAbGroup,
    Matrix,
    Subquotient,
    apply,
    as_int,
    hnf_rows,
    image,
    kernel,
    matmul,
    preimage,
    standard,
)

COEFFS = ("Z", "ZL", "Z2")


def _check_shape(M: Matrix, rows: int, cols: int, name: str) -> Matrix:
    M = [list(map(int, r)) for r in M]
    if rows == 0 or cols == 0:
        if any(len(r) for r in M) or (rows == 0 and M):
            raise NotAComplex(f"{name}: expected a {rows}x{cols} matrix")
        return [[0] * cols for _ in range(rows)]
    if len(M) != rows or any(len(r) != cols for r in M):
        raise NotAComplex(f"{name}: expected a {rows}x{cols} matrix")
    return M


@dataclass(frozen=True)
class CochainComplexSpec:
    """Cellular cochains; ``Z[k]`` is the coboundary ``C^k -> C^{k+1}`` as a ``cells[k+1] x cells[k]`` matrix."""

    cells: tuple
    Z: tuple
    ZL: tuple
    Z2: tuple

    def __post_init__(self):
        cells = tuple(int(c) for c in self.cells)
        if any(c < 0 for c in cells):
            raise NotAComplex("cell counts must be nonnegative")
        object.__setattr__(self, "cells", cells)
        for name in COEFFS:
            mats = getattr(self, name)
            if len(mats) != max(len(cells) - 1, 0):
                raise NotAComplex(f"{name}: need {len(cells) - 1} coboundary matrices, got {len(mats)}")
            mats = tuple(_check_shape(M, cells[k + 1], cells[k], f"{name}[{k}]") for k, M in enumerate(mats))
            object.__setattr__(self, name, mats)
        self.validate()

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def validate(self) -> None:
        for name in COEFFS:
            mats = getattr(self, name)
            for k in range(len(mats) - 1):
                prod = matmul(mats[k + 1], mats[k]) if self.cells[k + 1] else []
                mod = 2 if name == "Z2" else 0
                for row in prod:
                    for a in row:
                        if (a % 2 if mod else a):
                            raise NotAComplex(f"NotAComplex: {name} coboundaries {k + 1}o{k} do not compose to zero")
        for k in range(self.dim):
            for name in ("Z", "ZL"):
                for r1, r2 in zip(getattr(self, name)[k], self.Z2[k]):
                    if any((a - b) % 2 for a, b in zip(r1, r2)):
                        raise NotAComplex(f"NotAComplex: Z2[{k}] is not the reduction of {name}[{k}]")

    def delta(self, coeff: str, k: int) -> Matrix:
        if coeff not in COEFFS:
            raise ValueError(f"unknown coefficient system {coeff!r}")
        if k < 0 or k >= self.dim:
            nxt = self.cells[k + 1] if 0 <= k + 1 <= self.dim else 0
            cur = self.cells[k] if 0 <= k <= self.dim else 0
            return [[0] * cur for _ in range(nxt)]
        return getattr(self, coeff)[k]

    # -- JSON ---------------------------------------------------------------------
    def to_json(self) -> dict:
        return {"cells": list(self.cells), "Z": [list(map(list, M)) for M in self.Z],
                "ZL": [list(map(list, M)) for M in self.ZL], "Z2": [list(map(list, M)) for M in self.Z2]}

    @classmethod
    def from_json(cls, data: dict | str) -> "CochainComplexSpec":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(tuple(data["cells"]), tuple(data["Z"]), tuple(data["ZL"]), tuple(data["Z2"]))
        except KeyError as exc:
            raise NotAComplex(f"missing key {exc}") from None


def cocycles(spec: CochainComplexSpec, coeff: str, k: int) -> list:
    n = spec.cells[k]
    d = spec.delta(coeff, k)
    m = len(d)
    if coeff == "Z2":
        return preimage(d, standard(n), standard(m, 2), n, m) if m else standard(n)
    return kernel(d, n) if m else standard(n)


def coboundaries(spec: CochainComplexSpec, coeff: str, k: int) -> list:
    n = spec.cells[k]
    gens = image(spec.delta(coeff, k - 1), standard(spec.cells[k - 1]), n) if k >= 1 else []
    if coeff == "Z2":
        gens = gens + standard(n, 2)
    return hnf_rows(gens, n)


def cohomology_data(spec: CochainComplexSpec, coeff: str) -> list[Subquotient]:
    return [Subquotient(cocycles(spec, coeff, k), coboundaries(spec, coeff, k), spec.cells[k]) for k in range(spec.dim + 1)]


def cohomology(spec: CochainComplexSpec, coeff: str) -> list[FinAbGroup]:
    """``H^k = ker delta^k / im delta^{k-1}`` for every ``k``."""
    return [h.group for h in cohomology_data(spec, coeff)]


def bockstein_matrix(spec: CochainComplexSpec, L: str, k: int) -> Matrix:
    """``delta_L^k / 2``: integral on mod-2 cocycle lifts, the cochain-level Bockstein."""
    return [[Fraction(a, 2) for a in row] for row in spec.delta(L, k)]


def bockstein(spec: CochainComplexSpec, L: str, k: int, cocycle: Sequence[int]) -> tuple:
    """Bockstein ``H^k(Z/2) -> H^{k+1}(Z(L))`` of the class of a mod-2 cocycle, in Smith coordinates.

    Lift to integers, apply the twisted coboundary, divide by two.
    """
    if k + 1 > spec.dim:
        return ()
    lift = tuple(int(a) % 2 for a in cocycle)
    if any(a % 2 for a in apply(spec.delta("Z2", k), lift)):
        raise ValueError("not a mod-2 cocycle")
    img = as_int(apply(bockstein_matrix(spec, L, k), lift))
    target = cohomology_data(spec, L)[k + 1]
    return target.coords(img)


def bockstein_images(spec: CochainComplexSpec, L: str, k: int) -> list[tuple]:
    """Images of the Smith generators of ``H^k(Z/2)``."""
    src = cohomology_data(spec, "Z2")[k]
    return [bockstein(spec, L, k, g) for g in src.generators()]


# -- built-in spaces ------------------------------------------------------------------------


@dataclass(frozen=True)
class CellularVariety:
    """Real points of a cellular variety as a CW complex, plus the algebraic cell counts."""

    name: str
    spec: CochainComplexSpec
    codim_cells: tuple = field(default=())

    @property
    def dim(self) -> int:
        return self.spec.dim


def _rp_matrices(n: int, twisted: bool) -> tuple:
    mats = []
    for k in range(n):
        even = k % 2 == 0
        mats.append([[2 if even == twisted else 0]])
    return tuple(mats)


def projective_space(n: int) -> CellularVariety:
    """RP^n with the cell structure of one cell per dimension; ZL is the tautological system."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    z, zl = _rp_matrices(n, False), _rp_matrices(n, True)
    z2 = tuple([[0]] for _ in range(n))
    spec = CochainComplexSpec(tuple([1] * (n + 1)), z, zl, z2)
    return CellularVariety(f"RP{n}", spec, tuple([1] * (n + 1)))


def sphere(n: int) -> CellularVariety:
    """S^n with two cells; on S^1 the twisted system is the Moebius one."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        spec = CochainComplexSpec((2,), (), (), ())
        return CellularVariety("S0", spec, (2,))
    if n == 1:
        var = projective_space(1)
        return CellularVariety("S1", var.spec, (1, 1))
    cells = tuple([1] + [0] * (n - 1) + [1])
    mats = tuple(_zero(cells[k + 1], cells[k]) for k in range(n))
    spec = CochainComplexSpec(cells, mats, mats, mats)
    return CellularVariety(f"S{n}", spec, cells)


def _zero(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def builtin(name: str) -> CellularVariety:
    """``RPn``, ``Sn`` or ``P1`` (whose real points are the circle RP^1)."""
    name = name.strip()
    if name == "P1":
        return CellularVariety("P1", projective_space(1).spec, (1, 1))
    for prefix, make in (("RP", projective_space), ("S", sphere)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return make(int(name[len(prefix):]))
    raise ValueError(f"unknown built-in space {name!r}")


def variety_from_json(data: dict | str, name: str = "X") -> CellularVariety:
    if isinstance(data, str):
        data = json.loads(data)
    spec = CochainComplexSpec.from_json(data)
    codim = tuple(data.get("codim_cells", spec.cells))
    return CellularVariety(data.get("name", name), spec, codim)
