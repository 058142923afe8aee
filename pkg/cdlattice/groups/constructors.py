"""Constructors for cyclic, dihedral, dicyclic, product, semidirect and quotient groups."""
from __future__ import annotations

import logging
from math import gcd
from typing import TYPE_CHECKING, Mapping, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from cdlattice.core.config import Limits, resolve_limits
from cdlattice.core.exceptions import InvalidActionError, InvalidParameterError, NotNormalError
from cdlattice.groups.group import Group, check_order

if TYPE_CHECKING:
    from cdlattice.lattice.subgroups import Subgroup

logger = logging.getLogger(__name__)


def make_cyclic(n: int, *, limits: Optional[Limits] = None) -> Group:
    """Cyclic group of order ``n``; element ``k`` is the ``k``-th power of the generator."""

    if n < 1:
        raise InvalidParameterError(f"Cyclic group order must be >= 1, got {n}.")
    label = f"C{n}"
    check_order(n, resolve_limits(limits), label=label)
    indices = np.arange(n)
    table = np.add.outer(indices, indices) % n
    return Group(table, label=label, identity=0, limits=limits)


def make_dihedral(two_n: int, *, limits: Optional[Limits] = None) -> Group:
    """Dihedral group of order ``two_n``.

    Indices ``0..n-1`` are the rotations ``r^k``; ``n + k`` is the reflection ``s r^k``.
    """

    if two_n < 2 or two_n % 2 != 0:
        raise InvalidParameterError(f"Dihedral order must be a positive even integer, got {two_n}.")
    label = f"D{two_n}"
    check_order(two_n, resolve_limits(limits), label=label)

    n = two_n // 2
    k = np.arange(two_n)
    rot = k % n
    is_reflection = k >= n
    a = rot[:, None]
    b = rot[None, :]
    left_reflection = is_reflection[:, None]
    right_reflection = is_reflection[None, :]

    # r^a r^b = r^(a+b); r^a s r^b = s r^(b-a); s r^a r^b = s r^(a+b); s r^a s r^b = r^(b-a)
    exponent = np.where(right_reflection, b - a, a + b) % n
    reflection = left_reflection ^ right_reflection
    table = np.where(reflection, n + exponent, exponent)
    return Group(table, label=label, identity=0, limits=limits)


def make_dicyclic(n: int, *, limits: Optional[Limits] = None) -> Group:
    """Dicyclic group ``<a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>`` of order ``4n``.

    Indices ``0..2n-1`` are ``a^k``; ``2n + k`` is ``a^k b``.
    """

    if n < 1:
        raise InvalidParameterError(f"Dicyclic parameter must be >= 1, got {n}.")
    order = 4 * n
    label = dicyclic_label(n)
    check_order(order, resolve_limits(limits), label=label)

    m = 2 * n
    k = np.arange(order)
    power = k % m
    has_b = k >= m
    i = power[:, None]
    j = power[None, :]
    left_b = has_b[:, None]
    right_b = has_b[None, :]

    # a^i a^j = a^(i+j); a^i a^j b = a^(i+j) b; a^i b a^j = a^(i-j) b; a^i b a^j b = a^(i-j+n)
    exponent = np.where(left_b, i - j, i + j)
    exponent = np.where(left_b & right_b, exponent + n, exponent) % m
    table = np.where(left_b ^ right_b, m + exponent, exponent)
    return Group(table, label=label, identity=0, limits=limits)


def dicyclic_label(n: int) -> str:
    """``Q<4n>`` for generalized quaternion groups, ``Dic<n>`` otherwise."""

    order = 4 * n
    if n >= 2 and order & (order - 1) == 0:
        return f"Q{order}"
    return f"Dic{n}"


def direct_product(
    first: Group, second: Group, *, limits: Optional[Limits] = None, label: Optional[str] = None
) -> Group:
    """Direct product on index pairs flattened row-major: ``(g, h) -> g * |H| + h``."""

    order = first.order * second.order
    resolved_label = label or f"{first.label}x{second.label}"
    check_order(order, resolve_limits(limits), label=resolved_label)

    width = second.order
    k = np.arange(order)
    g = k // width
    h = k % width
    table = first.table[np.ix_(g, g)] * width + second.table[np.ix_(h, h)]
    identity = first.identity * width + second.identity
    return Group(table, label=resolved_label, identity=identity, limits=limits)


def semidirect_cyclic(m: int, n: int, t: int, *, limits: Optional[Limits] = None) -> Group:
    """Metacyclic group ``<a, b | a^m = b^n = 1, b a b^-1 = a^t>`` on pairs ``(i, j) -> i * n + j``."""

    check_cyclic_action(m, n, t)

    label = f"SDP({m},{n},{t})"
    order = m * n
    check_order(order, resolve_limits(limits), label=label)

    twist = np.array([pow(t, j, m) for j in range(n)], dtype=np.int64)
    k = np.arange(order)
    i = k // n
    j = k % n
    first = (i[:, None] + twist[j][:, None] * i[None, :]) % m
    second = (j[:, None] + j[None, :]) % n
    table = first * n + second
    return Group(table, label=label, identity=0, limits=limits)


def check_cyclic_action(m: int, n: int, t: int) -> None:
    """Validate that ``a -> a^t`` defines an action of ``C_n`` on ``C_m``."""

    if m < 1 or n < 1 or t < 1:
        raise InvalidParameterError(f"SDP parameters must be positive, got ({m}, {n}, {t}).")
    if gcd(t, m) != 1:
        raise InvalidActionError(f"SDP({m},{n},{t}): gcd(t, m) must be 1.")
    if pow(t, n, m) != 1 % m:
        raise InvalidActionError(f"SDP({m},{n},{t}): t^n must be congruent to 1 modulo m.")


def semidirect_general(
    normal: Group,
    acting: Group,
    action: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
    *,
    limits: Optional[Limits] = None,
    label: Optional[str] = None,
) -> Group:
    """Semidirect product ``N x| H`` with ``(x, h)(x', h') = (x * action[h](x'), h * h')``.

    ``action`` gives, for every element of ``H``, the permutation of ``N``'s indices it
    induces. Each permutation must be an automorphism and the assignment must be a
    homomorphism; both are checked pointwise.
    """

    resolved_label = label or f"{normal.label}:{acting.label}"
    order = normal.order * acting.order
    check_order(order, resolve_limits(limits), label=resolved_label)

    perms = _action_matrix(normal, acting, action, resolved_label)
    _check_automorphisms(normal, perms, resolved_label)
    _check_homomorphism(acting, perms, resolved_label)

    width = acting.order
    k = np.arange(order)
    x = k // width
    h = k % width
    twisted = perms[h[:, None], x[None, :]]
    first = normal.table[x[:, None], twisted]
    second = acting.table[h[:, None], h[None, :]]
    table = first * width + second
    identity = normal.identity * width + acting.identity
    return Group(table, label=resolved_label, identity=identity, limits=limits)


def quotient(
    group: Group,
    kernel: "Subgroup",
    *,
    label: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> Group:
    """Quotient by a normal subgroup; each coset is represented by its minimal element index."""

    from cdlattice.lattice.subgroups import is_normal

    if kernel.parent is not group:
        raise InvalidParameterError("Kernel must be a subgroup of the given group.")
    if not is_normal(group, kernel):
        raise NotNormalError(f"Subgroup of order {kernel.size} is not normal in {group.label}.")

    members = kernel.elements
    cosets = group.table[:, members]  # row g lists the left coset gN
    representatives = cosets.min(axis=1)
    unique_reps = np.unique(representatives)
    position = np.full(group.order, -1, dtype=np.int64)
    position[unique_reps] = np.arange(len(unique_reps))
    coset_of = position[representatives]

    products = group.table[np.ix_(unique_reps, unique_reps)]
    table = coset_of[products]
    identity = int(coset_of[group.identity])
    resolved_label = label or f"{group.label}/N{kernel.size}"
    logger.debug("Quotient %s has order %s", resolved_label, len(unique_reps))
    return Group(table, label=resolved_label, identity=identity, limits=limits)


def _action_matrix(
    normal: Group,
    acting: Group,
    action: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
    label: str,
) -> NDArray[np.int64]:
    if isinstance(action, Mapping):
        missing = [h for h in range(acting.order) if h not in action]
        if missing:
            raise InvalidActionError(f"{label}: action missing for acting elements {missing}.")
        rows = [list(action[h]) for h in range(acting.order)]
    else:
        rows = [list(row) for row in action]
        if len(rows) != acting.order:
            msg = f"{label}: action must list one permutation per acting element ({acting.order})."
            raise InvalidActionError(msg)

    try:
        perms = np.array(rows, dtype=np.int64)
    except ValueError as exc:
        raise InvalidActionError(f"{label}: action rows must be integer permutations.") from exc
    if perms.shape != (acting.order, normal.order):
        raise InvalidActionError(f"{label}: each permutation must have {normal.order} entries.")

    reference = np.arange(normal.order)
    for h, perm in enumerate(perms):
        if not np.array_equal(np.sort(perm), reference):
            raise InvalidActionError(f"{label}: action[{h}] is not a permutation.")
    return perms


def _check_automorphisms(normal: Group, perms: NDArray[np.int64], label: str) -> None:
    table = normal.table
    for h, perm in enumerate(perms):
        # perm(x * y) == perm(x) * perm(y)
        if not np.array_equal(perm[table], table[np.ix_(perm, perm)]):
            raise InvalidActionError(f"{label}: action[{h}] is not an automorphism.")


def _check_homomorphism(acting: Group, perms: NDArray[np.int64], label: str) -> None:
    for h1 in range(acting.order):
        for h2 in range(acting.order):
            product = int(acting.table[h1, h2])
            if not np.array_equal(perms[product], perms[h1][perms[h2]]):
                msg = f"{label}: action[{h1}*{h2}] differs from action[{h1}] o action[{h2}]."
                raise InvalidActionError(msg)


__all__ = [
    "check_cyclic_action",
    "dicyclic_label",
    "direct_product",
    "make_cyclic",
    "make_dicyclic",
    "make_dihedral",
    "quotient",
    "semidirect_cyclic",
    "semidirect_general",
]
