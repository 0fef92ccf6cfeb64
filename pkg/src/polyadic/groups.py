"""Multiplicative n-ary group structure of finite polyadic fields.

Cyclic subgroups generated by polyadic powers, the split between them
and the subgroup of units, primitive elements, and reflections (elements
a power of which lands on a unit).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import NotAFieldError, NoUnitsError
from .finite import FiniteRing, element_order, structure_report


@dataclass(frozen=True)
class GroupDecomposition:
    ring: FiniteRing
    subgroups: tuple[tuple[int, ...], ...]
    unit_subgroup: tuple[int, ...]
    unit_subgroup_split: bool
    covers: bool
    pairwise_disjoint: bool
    primitive_elements: tuple[int, ...]
    kappa_prim: int
    reflections: tuple[tuple[int, int], ...]


def _require_field(fr: FiniteRing) -> None:
    if not structure_report(fr).is_field:
        raise NotAFieldError(f"{fr!r} is not a polyadic field")


def _orbit(fr: FiniteRing, k: int) -> tuple[int, ...]:
    """Indices of the successive multiplicative powers of k, one full cycle."""
    target = fr.rep(k)
    step = pow(target, fr.ring.n - 1, fr.modulus)
    out = []
    v = target
    while True:
        v = (v * step) % fr.modulus
        out.append((v - fr.ring.a) // fr.ring.b)
        if v == target:
            return tuple(out)


def cyclic_subgroup(fr: FiniteRing, k: int) -> frozenset[int]:
    """The cyclic n-ary subgroup generated by a non-zero element."""
    _require_field(fr)
    report = structure_report(fr)
    if report.zero == k:
        raise ValueError("the zero generates no multiplicative subgroup")
    return frozenset(_orbit(fr, k))


def _reflection_map(fr: FiniteRing, units: set[int], zero: Optional[int]) -> dict[int, int]:
    out = {}
    q_star = fr.q - 1 if zero is not None else fr.q
    for k in fr.elements():
        if k in units or k == zero:
            continue
        target = fr.rep(k)
        step = pow(target, fr.ring.n - 1, fr.modulus)
        v = target
        for l in range(1, q_star + 1):
            v = (v * step) % fr.modulus
            idx = (v - fr.ring.a) // fr.ring.b
            if idx in units:
                out[k] = l
                break
    return out


def reflections(fr: FiniteRing) -> dict[int, int]:
    """Least l per non-unit with the l-th power on a unit; absent if never."""
    report = structure_report(fr)
    if not report.units:
        raise NoUnitsError(f"{fr!r} has no unit")
    return _reflection_map(fr, set(report.units), report.zero)


def primitive_elements(fr: FiniteRing) -> tuple[frozenset[int], int]:
    """Non-zero elements whose idempotence order is the full reduced order."""
    _require_field(fr)
    report = structure_report(fr)
    prim = frozenset(
        k for k in fr.elements()
        if k != report.zero and element_order(fr, k) == report.q_star
    )
    return prim, len(prim)


@lru_cache(maxsize=None)
def decompose(fr: FiniteRing) -> GroupDecomposition:
    """Collect the maximal cyclic subgroups and measure how they fit together.

    Subgroups are generated by non-unit, non-zero elements; the units form
    their own subgroup reported separately.  All flags are computed, never
    assumed: disjointness and coverage may legitimately fail.
    """
    _require_field(fr)
    report = structure_report(fr)
    units = set(report.units)
    zero = report.zero
    nonzero = {k for k in fr.elements() if k != zero}
    generators = [k for k in sorted(nonzero) if k not in units]
    candidates = {frozenset(_orbit(fr, k)) for k in generators}
    maximal = [g for g in candidates if not any(g < h for h in candidates)]
    subgroups = tuple(sorted((tuple(sorted(g)) for g in maximal), key=lambda g: g[0]))
    disjoint = all(
        not set(subgroups[i]) & set(subgroups[j])
        for i in range(len(subgroups))
        for j in range(i + 1, len(subgroups))
    )
    union = set().union(*subgroups) if subgroups else set()
    covers = union | units == nonzero
    split = all(not units & set(g) for g in subgroups)
    prim, kappa = primitive_elements(fr)
    refl = _reflection_map(fr, units, zero)
    return GroupDecomposition(
        ring=fr,
        subgroups=subgroups,
        unit_subgroup=tuple(sorted(units)),
        unit_subgroup_split=split,
        covers=covers,
        pairwise_disjoint=disjoint,
        primitive_elements=tuple(sorted(prim)),
        kappa_prim=kappa,
        reflections=tuple(sorted(refl.items())),
    )


def decomposition_to_dict(dec: GroupDecomposition) -> dict:
    """JSON payload attached under the `group` key of a ring report."""
    return {
        "subgroups": [list(g) for g in dec.subgroups],
        "units": list(dec.unit_subgroup),
        "split": dec.unit_subgroup_split,
        "covers": dec.covers,
        "primitive": list(dec.primitive_elements),
        "reflections": {str(k): l for k, l in dec.reflections},
    }
