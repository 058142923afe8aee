from __future__ import annotations

import re
from pathlib import Path

import networkx as nx
import pytest

from cdlattice.catalog.dot import export_dot, write_dot
from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InvalidParameterError, UnsupportedError
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import SubgroupLattice, all_subgroups
from cdlattice.measures.chermak_delgado import cd_lattice

NODE = re.compile(r'^\s*"(H\d+)" \[label="\|H\|=(\d+), m=(\d+)"(.*)\] ;$', re.MULTILINE)
EDGE = re.compile(r'^\s*"(H\d+)" -> "(H\d+)" ;$', re.MULTILINE)


def _graph(text: str) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(match.group(1) for match in NODE.finditer(text))
    graph.add_edges_from(EDGE.findall(text))
    return graph


def test_quaternion_dot_structure(q8: Group, q8_lattice: SubgroupLattice) -> None:
    text = export_dot(q8_lattice, cd_lattice(q8, q8_lattice))
    graph = _graph(text)

    assert text.startswith('digraph "Q8" {')
    assert 'rankdir = "BT"' in text
    assert graph.number_of_nodes() == 6
    assert set(graph.edges()) == {(f"H{a}", f"H{b}") for a, b in q8_lattice.hasse}
    assert nx.is_directed_acyclic_graph(graph)
    sources = [node for node in graph if graph.in_degree(node) == 0]
    sinks = [node for node in graph if graph.out_degree(node) == 0]
    assert sources == ["H0"]
    assert sinks == [f"H{q8_lattice.top}"]


def test_cd_members_are_highlighted(d8: Group, d8_lattice: SubgroupLattice) -> None:
    report = cd_lattice(d8, d8_lattice)
    text = export_dot(d8_lattice, report, title="dihedral")

    nodes = {match.group(1): match for match in NODE.finditer(text)}
    doubled = {name for name, match in nodes.items() if "peripheries=2" in match.group(4)}
    filled = {name for name, match in nodes.items() if "lightgrey" in match.group(4)}
    assert text.startswith('digraph "dihedral" {')
    assert doubled == {f"H{i}" for i in report.cd_members}
    assert filled == {f"H{report.cd_subgroup_id}"}
    assert nodes["H0"].group(3) == "8"


def test_mismatched_report_is_rejected(
    d8: Group, d8_lattice: SubgroupLattice, q8: Group, q8_lattice: SubgroupLattice
) -> None:
    with pytest.raises(InvalidParameterError):
        export_dot(d8_lattice, cd_lattice(q8, q8_lattice))


def test_export_requires_hasse_diagram(d8: Group) -> None:
    lattice = all_subgroups(d8, limits=Limits(max_hasse_subgroups=3))
    report = cd_lattice(d8, lattice)

    with pytest.raises(UnsupportedError):
        export_dot(lattice, report)


def test_write_dot_creates_parent_directories(
    tmp_path: Path, q8: Group, q8_lattice: SubgroupLattice
) -> None:
    text = export_dot(q8_lattice, cd_lattice(q8, q8_lattice))
    target = write_dot(text, tmp_path / "out" / "q8.dot")

    assert target.read_text(encoding="utf-8") == text
