"""Core shared types for cd-lattice."""
from __future__ import annotations

from typing import Literal

Verdict = Literal["pass", "fail", "n/a"]
"""Outcome of a single machine-checked conclusion."""

HypothesisVerdict = Literal["true", "false", "vacuous"]

RecognitionKind = Literal["Cp", "Q8", "neither"]

FamilyTag = Literal[
    "cyclic",
    "abelian",
    "elementary-abelian",
    "dihedral",
    "dicyclic",
    "metacyclic",
    "equal-measure",
    "nonabelian",
]


def verdict(flag: bool) -> Verdict:
    """Translate a boolean check outcome into a :data:`Verdict`."""

    return "pass" if flag else "fail"
