import json
from pathlib import Path

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st
from sympy.matrices.normalforms import smith_normal_form

from realcycles.cellular import (
    CochainComplexSpec,
    FinAbGroup,
    bockstein,
    bockstein_images,
    builtin,
    chow_tables,
    chow_witt_table,
    cohomology,
    cohomology_data,
    derive_I_table,
    dichotomy_values,
    smith,
    variety_from_json,
)
from realcycles.cellular.complexes import bockstein_matrix
from realcycles.cellular.lattice import as_int, apply, hnf_rows, matmul
from realcycles.errors import NotAComplex

Z, Z2 = FinAbGroup(1), FinAbGroup(0, (2,))
ZERO = FinAbGroup(0)
GOLDEN = Path(__file__).parent / "golden"
BUILTINS = [f"RP{n}" for n in range(6)] + ["S1", "S2", "S3", "P1"]


def test_cohomology_examples():
    rp2 = builtin("RP2").spec
    assert cohomology(rp2, "Z") == [Z, ZERO, Z2]
    assert cohomology(rp2, "ZL") == [ZERO, Z2, Z]
    assert cohomology(builtin("S1").spec, "ZL") == [ZERO, Z2]
    assert cohomology(builtin("RP3").spec, "Z") == [Z, ZERO, Z2, Z]
    assert cohomology(builtin("S2").spec, "Z") == [Z, ZERO, Z]
    assert cohomology(builtin("P1").spec, "Z") == cohomology(builtin("S1").spec, "Z")


def test_bockstein_examples():
    assert bockstein_images(builtin("RP2").spec, "Z", 1) == [(1,)]
    assert bockstein_images(builtin("S1").spec, "ZL", 0) == [(1,)]
    # a class with an integral lift dies
    assert not any(bockstein(builtin("RP2").spec, "Z", 0, (1,)))


def test_not_a_complex():
    with pytest.raises(NotAComplex):
        CochainComplexSpec((1, 1, 1), ([[1]], [[1]]), ([[0]], [[0]]), ([[1]], [[1]]))
    with pytest.raises(NotAComplex):
        CochainComplexSpec((1, 1), ([[2]],), ([[1]],), ([[0]],))


def test_json_roundtrip():
    spec = builtin("RP3").spec
    X = variety_from_json(json.dumps(spec.to_json()), "RP3copy")
    assert cohomology(X.spec, "ZL") == cohomology(spec, "ZL")


def test_chow_tables_examples():
    CH, Ch = chow_tables(builtin("P1"))
    assert CH == [Z, Z] and Ch == [Z2, Z2]
    assert chow_tables(builtin("RP3"))[1] == [Z2] * 4
    assert chow_tables(builtin("S2"))[0] == [Z, ZERO, Z]


def test_table_examples():
    T = derive_I_table(builtin("P1"))
    assert [T.group(0, j, "Z") for j in range(3)] == [Z] * 3
    assert [T.group(1, j, "Z") for j in range(3)] == [Z] * 3
    assert [T.group(0, j, "ZL") for j in range(3)] == [ZERO] * 3
    assert [T.group(1, j, "ZL") for j in range(3)] == [ZERO, Z2, Z2]
    assert derive_I_table(builtin("RP2")).group(2, 1, "Z") == ZERO


def test_golden_rp3():
    assert derive_I_table(builtin("RP3")).to_tsv() == (GOLDEN / "RP3.tsv").read_text()


def test_chow_witt_examples():
    cw = chow_witt_table(builtin("P1"), "Z")
    assert cw[1].group == FinAbGroup(2)
    assert cw[1].lattice.A == hnf_rows([(1, 1), (0, 2)], 2)
    assert chow_witt_table(builtin("P1"), "ZL")[1].group == FinAbGroup(1)
    assert cw[0].group == FinAbGroup(2)


@pytest.mark.parametrize("name", BUILTINS)
def test_universal_coefficients(name):
    spec = builtin(name).spec
    h2 = cohomology(spec, "Z2")
    for L in ("Z", "ZL"):
        A = cohomology(spec, L) + [ZERO]
        for k, h in enumerate(h2):
            even = lambda g: sum(1 for d in g.torsion if d % 2 == 0)
            assert h.rank + len(h.torsion) == A[k].rank + even(A[k]) + even(A[k + 1])


@pytest.mark.parametrize("name", BUILTINS)
def test_bockstein_then_reduction_vanishes(name):
    spec = builtin(name).spec
    for L in ("Z", "ZL"):
        data = cohomology_data(spec, L)
        for k in range(spec.dim - 1):
            for g in cohomology_data(spec, "Z2")[k].generators():
                lifted = as_int(apply(bockstein_matrix(spec, L, k), [a % 2 for a in g]))
                again = as_int(apply(bockstein_matrix(spec, L, k + 1), [a % 2 for a in lifted]))
                assert data[k + 2].is_zero_class(again)


@pytest.mark.parametrize("n", range(6))
def test_rp_tables(n):
    T = derive_I_table(builtin(f"RP{n}"))
    for L in ("Z", "ZL"):
        A = cohomology(builtin(f"RP{n}").spec, L)
        for i in range(n + 1):
            assert len(dichotomy_values(T, i, L)) <= 2
            for j in range(T.jmax + 1):
                if j >= i:
                    assert T.group(i, j, L) == A[i]
                else:
                    # 2 A: Z stays Z, Z/2 dies
                    assert T.group(i, j, L) == FinAbGroup(A[i].rank)
    for i in range(n + 1):
        assert {T.bar_group(i, j) for j in range(i, T.jmax + 1)} == {Z2}
        assert all(T.bar_group(i, j) == ZERO for j in range(i))


@pytest.mark.parametrize("name", ["RP1", "RP2", "RP3", "RP4", "P1"])
def test_chow_witt_presentation(name):
    X = builtin(name)
    for L in ("Z", "ZL"):
        for e in chow_witt_table(X, L):
            assert e.projection_surjective and e.injective
            assert e.group.rank == e.witt_part.rank + e.kernel_rank


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_smith_matches_sympy(M):
    r, c = len(M), len(M[0])
    S = smith(M, r, c)
    assert matmul(matmul(S.U, M, r), S.V, c) == [[S.diag[i] if i == j and i < len(S.diag) else 0 for j in range(c)] for i in range(r)]
    ref = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    theirs = sorted(abs(int(ref[i, i])) for i in range(min(r, c)) if ref[i, i] != 0)
    assert sorted(abs(d) for d in S.diag if d) == theirs


@given(st.integers(0, 3), st.lists(st.sampled_from([2, 4, 6, 12]), max_size=3))
def test_finabgroup_roundtrip(rank, torsion):
    torsion = sorted(torsion)
    if all(b % a == 0 for a, b in zip(torsion, torsion[1:])):
        g = FinAbGroup(rank, tuple(torsion))
        assert FinAbGroup.parse(str(g)) == g
