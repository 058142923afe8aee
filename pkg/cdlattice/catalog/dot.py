"""DOT rendering of a subgroup lattice's Hasse diagram."""
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional

from jinja2 import Template

from cdlattice.core.exceptions import InvalidParameterError, UnsupportedError
from cdlattice.lattice.lattice import SubgroupLattice
from cdlattice.measures.chermak_delgado import CDReport

DOT_TEMPLATE = """digraph "{{ title }}" {
  rankdir = "BT" ;
  nodesep = 0.25 ;
  node [fontname="Helvetica", fontsize=10, shape=oval, style=filled, fillcolor=white] ;

  // subgroups
{% for node in nodes %}
  "H{{ node.id }}" [label="|H|={{ node.size }}, m={{ node.measure }}"{% if node.member %}, peripheries=2{% endif %}{% if node.cd_subgroup %}, fillcolor=lightgrey{% endif %}] ;
{% endfor %}

  // covers
{% for lower, upper in edges %}
  "H{{ lower }}" -> "H{{ upper }}" ;
{% endfor %}
}
"""


def export_dot(lattice: SubgroupLattice, report: CDReport, *, title: Optional[str] = None) -> str:
    """Render the Hasse diagram; CD members get a double border, ``M(G)`` is filled."""

    if report.group != lattice.group.label or len(report.measures) != len(lattice):
        raise InvalidParameterError("CD report does not match the lattice.")
    if not lattice.has_hasse:
        msg = (
            f"Lattice of {lattice.group.label} has {len(lattice)} subgroups; Hasse diagram "
            f"is only built up to {lattice.limits.max_hasse_subgroups}."
        )
        raise UnsupportedError(msg)

    members = set(report.cd_members)
    nodes: List[Dict[str, object]] = [
        {
            "id": row.id,
            "size": row.size,
            "measure": row.measure,
            "member": row.id in members,
            "cd_subgroup": row.id == report.cd_subgroup_id,
        }
        for row in report.measures
    ]
    rendered = Template(DOT_TEMPLATE, trim_blocks=True, lstrip_blocks=True).render(
        title=title or lattice.group.label,
        nodes=nodes,
        edges=lattice.hasse,
    )
    return rendered


def write_dot(text: str, path: Path | str) -> Path:
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(text, encoding="utf-8")
    return file_path


__all__ = ["DOT_TEMPLATE", "export_dot", "write_dot"]
