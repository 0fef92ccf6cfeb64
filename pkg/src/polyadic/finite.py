"""Finite polyadic rings of secondary congruence classes.

Fixing an order q turns the infinite class ring into a q-element ring on
class indices k = 0..q-1: representatives live modulo b*q, addition adds
indices plus the additive shape invariant, and multiplication is the
exact representative product reduced back to an index.  This module
classifies those rings: zero, units, field property, polyadic
characteristic, idempotence orders, and the JSON report format.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import ArityMismatchError, NoFiniteOrderError
from .ring import RingDescriptor, make_descriptor

REPORT_KEYS = (
    "a", "b", "m", "n", "I", "J", "q", "q_star", "n_admissible", "zero",
    "units", "kappa_e", "is_field", "chi_p", "lambda_p", "zeroless",
    "nonunital", "element_orders",
)


@dataclass(frozen=True)
class FiniteRing:
    """Secondary-class ring of order q over a ring descriptor."""

    ring: RingDescriptor
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"order must be positive, got {self.q}")

    @property
    def modulus(self) -> int:
        return self.ring.b * self.q

    def rep(self, k: int) -> int:
        """Canonical representative of index k, in [0, b*q)."""
        return self.ring.a + self.ring.b * (k % self.q)

    def index_of(self, value: int) -> int:
        v = value % self.modulus
        if v % self.ring.b != self.ring.a:
            raise ValueError(f"{value} is not in the class of {self.ring!r}")
        return (v - self.ring.a) // self.ring.b

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        d = self.ring
        return f"Z_({d.m},{d.n})^[{d.a},{d.b}]({self.q})"


def finite_ring(a: int, b: int, q: int) -> FiniteRing:
    return FiniteRing(make_descriptor(a, b), q)


def k_add(fr: FiniteRing, ks: Sequence[int]) -> int:
    """m-ary index addition: (sum + I) mod q."""
    if len(ks) != fr.ring.m:
        raise ArityMismatchError(fr.ring.m, len(ks))
    return (sum(ks) + fr.ring.i_shape) % fr.q


def k_mul(fr: FiniteRing, ks: Sequence[int]) -> int:
    """n-ary index multiplication via the exact representative product."""
    if len(ks) != fr.ring.n:
        raise ArityMismatchError(fr.ring.n, len(ks))
    prod = 1
    for k in ks:
        prod = (prod * fr.rep(k)) % fr.modulus
    return (prod - fr.ring.a) // fr.ring.b


def additive_quer_index(fr: FiniteRing, k: int) -> int:
    """Index of the additive querelement, (2-m)*k - I mod q."""
    return ((2 - fr.ring.m) * k - fr.ring.i_shape) % fr.q


def _products_mod(fr: FiniteRing, indices: Sequence[int], count: int) -> set[int]:
    """All residues mod b*q reachable as products of `count` representatives."""
    reps = [fr.rep(t) for t in indices]
    out = {1 % fr.modulus} if count == 0 else set(reps)
    for _ in range(count - 1):
        out = {(p * r) % fr.modulus for p in out for r in reps}
    return out


@lru_cache(maxsize=None)
def find_zero(fr: FiniteRing) -> Optional[int]:
    """The multiplicatively absorbing, additively 1-idempotent index, if any."""
    n = fr.ring.n
    products = _products_mod(fr, range(fr.q), n - 1)
    for z in fr.elements():
        rz = fr.rep(z)
        if (fr.ring.m * z + fr.ring.i_shape) % fr.q != z:
            continue
        if all((rz * p) % fr.modulus == rz for p in products):
            return z
    return None


@lru_cache(maxsize=None)
def find_units(fr: FiniteRing) -> tuple[int, ...]:
    """All indices e with mu[e^(n-1), x] = x for every x."""
    reps = [fr.rep(t) for t in fr.elements()]
    out = []
    for e in fr.elements():
        power = pow(fr.rep(e), fr.ring.n - 1, fr.modulus)
        if all((power * r) % fr.modulus == r for r in reps):
            out.append(e)
    return tuple(out)


def mult_querelements(fr: FiniteRing, k: int) -> tuple[int, ...]:
    """All y with mu[k^(n-1), y] = k; fields need exactly one per element."""
    power = pow(fr.rep(k), fr.ring.n - 1, fr.modulus)
    target = fr.rep(k)
    return tuple(y for y in fr.elements() if (power * fr.rep(y)) % fr.modulus == target)


def _is_field_on(fr: FiniteRing, subset: Sequence[int]) -> bool:
    """Field test on a subset closed under both operations.

    Checks the additive translations are bijections, finds the absorbing
    element inside the subset, and demands every multiplicative
    translation by an (n-1)-tuple to permute the remaining elements.
    """
    subset = sorted(subset)
    if not subset:
        return False
    sub = set(subset)
    q, mod = fr.q, fr.modulus
    # Additive translations t -> t + s + I must stay inside and be bijections.
    sums = {t % q for t in subset}
    for _ in range(fr.ring.m - 2):
        sums = {(s + t) % q for s in sums for t in subset}
    for s in sums:
        image = {(t + s + fr.ring.i_shape) % q for t in subset}
        if image != sub:
            return False
    # Absorbing element inside the subset, if any.
    products = _products_mod(fr, subset, fr.ring.n - 1)
    zero = None
    for z in subset:
        rz = fr.rep(z)
        if (fr.ring.m * z + fr.ring.i_shape) % q != z:
            continue
        if all((rz * p) % mod == rz for p in products):
            zero = z
            break
    core = [t for t in subset if t != zero]
    if not core:
        return False
    core_set = set(core)
    core_products = _products_mod(fr, core, fr.ring.n - 1)
    for p in core_products:
        image = set()
        for t in core:
            v = (p * fr.rep(t)) % mod
            idx = (v - fr.ring.a) // fr.ring.b
            if idx not in core_set or idx in image:
                return False
            image.add(idx)
    return True


@lru_cache(maxsize=None)
def is_field(fr: FiniteRing) -> bool:
    return _is_field_on(fr, tuple(fr.elements()))


def element_order(fr: FiniteRing, k: int) -> int:
    """Least lam >= 1 with the lam-th multiplicative power equal to k itself."""
    order = _element_order_or_none(fr, k)
    if order is None:
        raise NoFiniteOrderError(k, _cycle_length(fr, k))
    return order


def _element_order_or_none(fr: FiniteRing, k: int) -> Optional[int]:
    target = fr.rep(k)
    step = pow(target, fr.ring.n - 1, fr.modulus)
    bound = (fr.q - 1 if find_zero(fr) is not None else fr.q) + 1
    v = target
    for lam in range(1, bound + 1):
        v = (v * step) % fr.modulus
        if v == target:
            return lam
    return None


def _cycle_length(fr: FiniteRing, k: int) -> int:
    target = fr.rep(k)
    step = pow(target, fr.ring.n - 1, fr.modulus)
    seen: dict[int, int] = {}
    v = target
    i = 0
    while v not in seen:
        seen[v] = i
        v = (v * step) % fr.modulus
        i += 1
    return i - seen[v]


def characteristic(fr: FiniteRing) -> Optional[int]:
    """Least l >= 1 with the l-th additive power of the unit at the zero.

    Defined only when both a unit and the zero exist; with several units
    they must agree, anything else would be an internal inconsistency.
    """
    zero = find_zero(fr)
    units = find_units(fr)
    if zero is None or not units:
        return None
    values = set()
    for e in units:
        chi = None
        for l in range(1, fr.q + 1):
            count = l * (fr.ring.m - 1) + 1
            if (count * fr.rep(e)) % fr.modulus == fr.rep(zero):
                chi = l
                break
        values.add(chi)
    assert len(values) == 1, f"units disagree on the characteristic: {values}"
    return values.pop()


@dataclass(frozen=True)
class StructureReport:
    ring: FiniteRing
    zero: Optional[int]
    units: tuple[int, ...]
    is_field: bool
    chi_p: Optional[int]
    lambda_p: Optional[int]
    element_orders: tuple[Optional[int], ...]
    q_star: int
    n_admissible: bool
    zeroless: bool
    nonunital: bool

    @property
    def kappa_e(self) -> int:
        return len(self.units)


@lru_cache(maxsize=None)
def structure_report(fr: FiniteRing) -> StructureReport:
    """Full classification of one finite ring; deterministic and cached."""
    zero = find_zero(fr)
    units = find_units(fr)
    field = is_field(fr)
    orders = tuple(_element_order_or_none(fr, k) for k in fr.elements())
    nonzero_orders = [o for k, o in enumerate(orders) if k != zero]
    lambda_p = None
    if nonzero_orders and all(o is not None for o in nonzero_orders):
        lambda_p = max(nonzero_orders)
    q_star = fr.q - 1 if zero is not None else fr.q
    return StructureReport(
        ring=fr,
        zero=zero,
        units=units,
        is_field=field,
        chi_p=characteristic(fr),
        lambda_p=lambda_p,
        element_orders=orders,
        q_star=q_star,
        n_admissible=(q_star - 1) % (fr.ring.n - 1) == 0,
        zeroless=zero is None,
        nonunital=not units,
    )


def report_to_dict(report: StructureReport) -> dict:
    """Flat JSON-ready dict with the stable key order golden files rely on."""
    fr = report.ring
    d = fr.ring
    return {
        "a": d.a,
        "b": d.b,
        "m": d.m,
        "n": d.n,
        "I": d.i_shape,
        "J": d.j_shape,
        "q": fr.q,
        "q_star": report.q_star,
        "n_admissible": report.n_admissible,
        "zero": report.zero,
        "units": list(report.units),
        "kappa_e": report.kappa_e,
        "is_field": report.is_field,
        "chi_p": report.chi_p,
        "lambda_p": report.lambda_p,
        "zeroless": report.zeroless,
        "nonunital": report.nonunital,
        "element_orders": {str(k): o for k, o in enumerate(report.element_orders)},
    }


def proper_subfields(fr: FiniteRing) -> list[tuple[int, ...]]:
    """Nonempty proper subsets closed under both ops that form a field.

    Exhaustive over all subsets, so only sensible at small q; the
    expected result everywhere is an empty list.
    """
    from itertools import combinations

    q, mod = fr.q, fr.modulus
    found = []
    all_indices = list(fr.elements())
    for size in range(1, q):
        for subset in combinations(all_indices, size):
            sub = set(subset)
            sums = set(subset)
            for _ in range(fr.ring.m - 1):
                sums = {(s + t) % q for s in sums for t in subset}
            if not {(s + fr.ring.i_shape) % q for s in sums} <= sub:
                continue
            prods = _products_mod(fr, subset, fr.ring.n)
            if not {(p - fr.ring.a) // fr.ring.b for p in prods} <= sub:
                continue
            if _is_field_on(fr, subset):
                found.append(subset)
    return found
