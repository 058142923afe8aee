"""Chermak-Delgado measures and lattices."""

from cdlattice.measures.chermak_delgado import (
    PROPERTY_NAMES,
    CDReport,
    MeasureRow,
    PropertyCheck,
    cd_lattice,
    chermak_delgado_subgroup,
    measure,
    measure_table,
)

__all__ = [
    "CDReport",
    "MeasureRow",
    "PROPERTY_NAMES",
    "PropertyCheck",
    "cd_lattice",
    "chermak_delgado_subgroup",
    "measure",
    "measure_table",
]
