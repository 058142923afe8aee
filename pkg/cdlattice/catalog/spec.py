"""Parser for the group-spec mini-language.

Grammar (whitespace ignored)::

    spec := term ("x" term)*
    term := "C" int | "D" int | "Dic" int | "Q" int | "SDP(" int "," int "," int ")" | name

Products are left-associative direct products. ``Q<n>`` needs ``n`` divisible by 4
and stands for ``Dic<n/4>``. Names come from :data:`NAMED_RECIPES`.
"""
from __future__ import annotations

import logging
from typing import List, Literal, NoReturn, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from cdlattice.catalog.recipes import NAMED_RECIPES, get_recipe
from cdlattice.core.config import Limits
from cdlattice.core.exceptions import InvalidSpecError, SpecSyntaxError
from cdlattice.groups.constructors import (
    check_cyclic_action,
    dicyclic_label,
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    semidirect_cyclic,
)
from cdlattice.groups.group import Group

logger = logging.getLogger(__name__)

AtomKind = Literal["cyclic", "dihedral", "dicyclic", "sdp", "named"]


class SpecAtom(BaseModel):
    """One factor of a product spec."""

    kind: AtomKind
    params: Tuple[int, ...] = ()
    name: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @property
    def canonical(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.params[0]}"
        if self.kind == "dihedral":
            return f"D{self.params[0]}"
        if self.kind == "dicyclic":
            return dicyclic_label(self.params[0])
        if self.kind == "sdp":
            m, n, t = self.params
            return f"SDP({m},{n},{t})"
        return str(self.name)

    def build(self, *, limits: Optional[Limits] = None) -> Group:
        if self.kind == "cyclic":
            return make_cyclic(self.params[0], limits=limits)
        if self.kind == "dihedral":
            return make_dihedral(self.params[0], limits=limits)
        if self.kind == "dicyclic":
            return make_dicyclic(self.params[0], limits=limits)
        if self.kind == "sdp":
            m, n, t = self.params
            return semidirect_cyclic(m, n, t, limits=limits)
        return get_recipe(str(self.name))(limits)


class GroupSpec(BaseModel):
    """Parsed spec: the source text and its factors in order."""

    source: str
    atoms: Tuple[SpecAtom, ...] = Field(min_length=1)

    model_config = ConfigDict(frozen=True)

    @property
    def canonical(self) -> str:
        return "x".join(atom.canonical for atom in self.atoms)

    def __str__(self) -> str:
        return self.canonical


def parse_spec(text: str) -> GroupSpec:
    """Parse ``text`` into a :class:`GroupSpec`.

    Raises :class:`SpecSyntaxError` with the offending position, :class:`InvalidSpecError`
    for impossible parameters and ``InvalidActionError`` for an SDP whose twist is
    not an automorphism of the required order.
    """

    atoms = _Parser(text).parse()
    return GroupSpec(source=text, atoms=tuple(atoms))


def build_group(spec: GroupSpec | str, *, limits: Optional[Limits] = None) -> Group:
    """Build the group a spec describes; its label is the spec's canonical form."""

    parsed = parse_spec(spec) if isinstance(spec, str) else spec
    group = parsed.atoms[0].build(limits=limits)
    for atom in parsed.atoms[1:]:
        group = direct_product(group, atom.build(limits=limits), limits=limits)
    if group.label != parsed.canonical:
        group = group.relabel(parsed.canonical)
    logger.debug("Built %s (order %s)", group.label, group.order)
    return group


def canonical_form(text: str) -> str:
    return parse_spec(text).canonical


class _Parser:
    def __init__(self, text: str) -> None:
        compact = [(index, char) for index, char in enumerate(text) if not char.isspace()]
        self._text = "".join(char for _, char in compact)
        self._positions = [index for index, _ in compact]
        self._end_position = len(text)
        self._cursor = 0
        self._names: Sequence[str] = sorted(NAMED_RECIPES, key=len, reverse=True)

    def parse(self) -> List[SpecAtom]:
        if not self._text:
            raise SpecSyntaxError("Empty group spec", position=0)
        atoms = [self._term()]
        while self._cursor < len(self._text):
            if self._text[self._cursor] != "x":
                self._fail(f"Expected 'x' but found {self._text[self._cursor]!r}")
            self._cursor += 1
            atoms.append(self._term())
        return atoms

    def _term(self) -> SpecAtom:
        start = self._position()
        for name in self._names:
            if self._text.startswith(name, self._cursor):
                self._cursor += len(name)
                return SpecAtom(kind="named", name=name)

        if self._accept("SDP("):
            m = self._integer()
            self._expect(",")
            n = self._integer()
            self._expect(",")
            t = self._integer()
            self._expect(")")
            if m < 1 or n < 1 or t < 1:
                raise InvalidSpecError(f"SDP parameters must be positive (at position {start})")
            check_cyclic_action(m, n, t)
            return SpecAtom(kind="sdp", params=(m, n, t))

        if self._accept("Dic"):
            n = self._integer()
            if n < 1:
                raise InvalidSpecError(f"Dic{n}: parameter must be >= 1 (at position {start})")
            return SpecAtom(kind="dicyclic", params=(n,))

        if self._accept("C"):
            n = self._integer()
            if n < 1:
                raise InvalidSpecError(f"C{n}: order must be >= 1 (at position {start})")
            return SpecAtom(kind="cyclic", params=(n,))

        if self._accept("D"):
            n = self._integer()
            if n < 2 or n % 2 != 0:
                msg = f"D{n}: order must be a positive even integer (at position {start})"
                raise InvalidSpecError(msg)
            return SpecAtom(kind="dihedral", params=(n,))

        if self._accept("Q"):
            n = self._integer()
            if n < 4 or n % 4 != 0:
                msg = f"Q{n}: order must be a positive multiple of 4 (at position {start})"
                raise InvalidSpecError(msg)
            return SpecAtom(kind="dicyclic", params=(n // 4,))

        if self._cursor >= len(self._text):
            self._fail("Expected a group term but reached the end")
        self._fail(f"Unknown group term starting with {self._text[self._cursor]!r}")

    def _integer(self) -> int:
        begin = self._cursor
        while self._cursor < len(self._text) and self._text[self._cursor] in "0123456789":
            self._cursor += 1
        if begin == self._cursor:
            self._fail("Expected an integer")
        return int(self._text[begin : self._cursor])

    def _accept(self, token: str) -> bool:
        if self._text.startswith(token, self._cursor):
            self._cursor += len(token)
            return True
        return False

    def _expect(self, token: str) -> None:
        if not self._accept(token):
            self._fail(f"Expected {token!r}")

    def _position(self) -> int:
        if self._cursor < len(self._positions):
            return self._positions[self._cursor]
        return self._end_position

    def _fail(self, message: str) -> NoReturn:
        raise SpecSyntaxError(message, position=self._position())


__all__ = [
    "AtomKind",
    "GroupSpec",
    "SpecAtom",
    "build_group",
    "canonical_form",
    "parse_spec",
]
