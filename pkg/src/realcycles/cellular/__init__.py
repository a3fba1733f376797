"""Cellular cohomology with twisted coefficients and the derived I^j tables."""

from .complexes import (
    CellularVariety,
    CochainComplexSpec,
    bockstein,
    bockstein_images,
    builtin,
    cohomology,
    cohomology_data,
    projective_space,
    sphere,
    variety_from_json,
)
from .lattice import FinAbGroup, Subquotient, smith
from .tables import BigradedTable, chow_tables, chow_witt_table, derive_I_table, dichotomy_values

__all__ = [
    "BigradedTable",
    "CellularVariety",
    "CochainComplexSpec",
    "FinAbGroup",
    "Subquotient",
    "bockstein",
    "bockstein_images",
    "builtin",
    "chow_tables",
    "chow_witt_table",
    "cohomology",
    "cohomology_data",
    "derive_I_table",
    "dichotomy_values",
    "projective_space",
    "smith",
    "sphere",
    "variety_from_json",
]
