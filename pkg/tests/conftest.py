"""Pytest configuration for test suite."""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from cdlattice.catalog.spec import build_group  # noqa: E402
from cdlattice.groups.group import Group  # noqa: E402
from cdlattice.lattice.lattice import SubgroupLattice, all_subgroups  # noqa: E402


def pytest_configure(config) -> None:  # pragma: no cover - pytest hook
    config.addinivalue_line("markers", "slow: full catalog sweeps and large lattices")


@pytest.fixture
def q8() -> Group:
    return build_group("Q8")


@pytest.fixture
def d8() -> Group:
    return build_group("D8")


@pytest.fixture
def klein() -> Group:
    return build_group("C2xC2")


@pytest.fixture
def q8_lattice(q8: Group) -> SubgroupLattice:
    return all_subgroups(q8)


@pytest.fixture
def d8_lattice(d8: Group) -> SubgroupLattice:
    return all_subgroups(d8)
