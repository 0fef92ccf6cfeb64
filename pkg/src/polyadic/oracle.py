"""Brute-force reference implementations.

These deliberately share no code with the main paths: arities come from
a plain double scan, index multiplication from the literal
symmetric-polynomial expansion, and the field check from exhaustive
tuple enumeration.  Tests use them as the arbiter wherever the main
path uses a closed form or a pruned search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .errors import ForbiddenPairError
from .finite import FiniteRing, is_field


@dataclass
class OracleReport:
    subject: str
    instances: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_arity(a: int, b: int) -> tuple[int, int]:
    """Minimal arities by direct congruence scan; raises ForbiddenPairError."""
    m = next(m for m in range(2, b + 2) if (m * a) % b == a % b)
    for n in range(2, b + 2):
        if pow(a, n, b) == a % b:
            return m, n
    raise ForbiddenPairError(a, b)


def oracle_kmult(fr: FiniteRing, ks) -> int:
    """Index product evaluated term by term from the expanded form.

    Sum over j of a^(n-j) * b^(j-1) * (elementary symmetric polynomial of
    degree j in the indices), plus the multiplicative shape invariant,
    all modulo q.
    """
    a, b, n = fr.ring.a, fr.ring.b, fr.ring.n
    assert len(ks) == n
    total = 0
    for j in range(1, n + 1):
        sym = sum(_prod(c) for c in combinations(ks, j))
        total += a ** (n - j) * b ** (j - 1) * sym
    return (total + fr.ring.j_shape) % fr.q


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _mul(fr: FiniteRing, ks) -> int:
    # The oracle's own index multiplication, kept separate from k_mul.
    prod = 1
    for k in ks:
        prod = prod * (fr.ring.a + fr.ring.b * k) % fr.modulus
    return (prod - fr.ring.a) // fr.ring.b


def _add(fr: FiniteRing, ks) -> int:
    total = sum(fr.ring.a + fr.ring.b * k for k in ks) % fr.modulus
    return (total - fr.ring.a) // fr.ring.b


def _oracle_zero(fr: FiniteRing) -> Optional[int]:
    for z in fr.elements():
        if all(
            _mul(fr, (z,) + t) == z
            for t in product(fr.elements(), repeat=fr.ring.n - 1)
        ):
            return z
    return None


def oracle_is_field(fr: FiniteRing) -> bool:
    """Field verdict from exhaustive tuple enumeration, nothing clever."""
    q, m, n = fr.q, fr.ring.m, fr.ring.n
    # Additive m-ary group: every translation solves uniquely.
    for t in product(range(q), repeat=m - 1):
        for x in range(q):
            hits = [y for y in range(q) if _add(fr, t + (y,)) == x]
            if len(hits) != 1:
                return False
    zero = _oracle_zero(fr)
    core = [x for x in range(q) if x != zero]
    if not core:
        return False
    for t in product(core, repeat=n - 1):
        for x in core:
            hits = [y for y in core if _mul(fr, t + (y,)) == x]
            if len(hits) != 1:
                return False
    return True


def oracle_group_axioms(fr: FiniteRing, spot_checks: int = 25) -> OracleReport:
    """Exhaustive commutativity/solvability check plus associativity spot checks.

    Records a mismatch whenever an axiom fails where it must hold or the
    exhaustive field verdict disagrees with the main path.
    """
    report = OracleReport(subject=f"group axioms on {fr!r}")
    n = fr.ring.n
    rng = random.Random(20259)
    for ks in product(fr.elements(), repeat=n):
        report.instances += 1
        if _mul(fr, ks) != _mul(fr, tuple(sorted(ks))):
            report.mismatches.append(("commutativity", ks))
    for _ in range(spot_checks):
        word = tuple(rng.randrange(fr.q) for _ in range(2 * n - 1))
        report.instances += 1
        results = {
            _mul(fr, word[:i] + (_mul(fr, word[i : i + n]),) + word[i + n :])
            for i in range(n)
        }
        if len(results) != 1:
            report.mismatches.append(("associativity", word))
    verdict = oracle_is_field(fr)
    report.instances += 1
    if verdict != is_field(fr):
        report.mismatches.append(("field verdict", verdict, is_field(fr)))
    return report
