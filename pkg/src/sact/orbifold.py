"""Quotient-orbifold signatures and cyclic data sets.

All arithmetic is exact: genus equations are solved over Fraction and any
non-integrality is surfaced, never rounded.

Text grammars:
  signature        (g0;m1,m2,...)          cone orders ascending, (g0;-) if none
  cyclic data set  (n,g0;(c1,m1)^[l1],...) with - for an empty cone list
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import ParseError, ValidationFailure
from .groups import GroupSpec


@dataclass(frozen=True)
class Signature:
    """Orbifold signature: genus g0 plus cone-point orders."""

    g0: int
    periods: Tuple[int, ...]

    def __post_init__(self):
        if self.g0 < 0:
            raise ParseError("orbifold genus must be >= 0")
        if any(m < 2 for m in self.periods):
            raise ParseError("periods must be >= 2")
        if tuple(sorted(self.periods)) != self.periods:
            raise ParseError("periods must be sorted ascending")

    @property
    def r(self) -> int:
        return len(self.periods)

    def area_term(self) -> Fraction:
        """2 - 2*g0 - sum(1 - 1/m), the Euler characteristic of the orbifold."""
        return Fraction(2 - 2 * self.g0) - sum(Fraction(m - 1, m) for m in self.periods)

    def __str__(self) -> str:
        body = ",".join(str(m) for m in self.periods) if self.periods else "-"
        return f"({self.g0};{body})"


def signature(g0: int, periods: Sequence[int]) -> Signature:
    return Signature(g0, tuple(sorted(periods)))


def rh_genus(group_order: int, sig: Signature) -> Optional[int]:
    """Surface genus determined by 2-2g = |H| * chi(orbifold).

    Returns None when the equation has no non-negative integer solution.
    """
    two_minus_2g = group_order * sig.area_term()
    if two_minus_2g.denominator != 1 or (2 - two_minus_2g) % 2 != 0:
        return None
    g = (2 - int(two_minus_2g)) // 2
    return g if g >= 0 else None


def enumerate_signatures(group: GroupSpec, g: int) -> list:
    """All signatures whose periods are element orders of the group and whose
    RH genus is exactly g.  Complete: each period eats at least 1/2 of the
    remaining area, which bounds both r and g0."""
    if g < 2:
        raise ParseError("genus must be >= 2")
    orders = sorted(o for o in group.element_orders() if o >= 2)
    target_chi = Fraction(2 - 2 * g, group.order)
    out = []
    g0 = 0
    while True:
        need = Fraction(2 - 2 * g0) - target_chi  # required sum of (1 - 1/m)
        if need < 0:
            break
        _fill_periods(orders, 0, need, [], out, g0)
        g0 += 1
    return sorted(out, key=lambda s: (s.g0, s.periods))


def _fill_periods(orders, start, need, acc, out, g0):
    if need == 0:
        out.append(Signature(g0, tuple(acc)))
        return
    for idx in range(start, len(orders)):
        m = orders[idx]
        w = Fraction(m - 1, m)
        if w > need:
            break  # orders ascending, so every later weight is larger too
        acc.append(m)
        _fill_periods(orders, idx, need - w, acc, out, g0)
        acc.pop()


# ---------------------------------------------------------------------------
# cyclic data sets


@dataclass(frozen=True)
class CyclicDataSet:
    """Conjugacy invariant of one periodic map: degree, quotient genus, and
    (rotation number, order) pairs at the cone points, with multiplicity."""

    degree: int
    g0: int
    cones: Tuple[Tuple[int, int], ...]  # (c, m) pairs, repetition = multiplicity

    def __post_init__(self):
        if self.degree < 2:
            raise ParseError("cyclic data set degree must be >= 2")
        if self.g0 < 0:
            raise ParseError("quotient genus must be >= 0")
        if tuple(sorted(self.cones, key=lambda cm: (cm[1], cm[0]))) != self.cones:
            raise ParseError("cones must be sorted by (order, rotation)")

    @property
    def signature(self) -> Signature:
        return Signature(self.g0, tuple(sorted(m for _, m in self.cones)))

    def __str__(self) -> str:
        if not self.cones:
            return f"({self.degree},{self.g0};-)"
        return f"({self.degree},{self.g0};{_format_cones(self.cones)})"


def cyclic_data_set(degree: int, g0: int, cones: Sequence[Tuple[int, int]]) -> CyclicDataSet:
    return CyclicDataSet(degree, g0, tuple(sorted(cones, key=lambda cm: (cm[1], cm[0]))))


def validate_cyclic(d: CyclicDataSet) -> int:
    """Check the defining conditions and return the genus.

    Raises ValidationFailure tagged divisibility / lcm / congruence /
    integrality.
    """
    n = d.degree
    for c, m in d.cones:
        if m < 2 or n % m != 0 or math.gcd(c, m) != 1 or not 1 <= c < m:
            raise ValidationFailure("divisibility", f"cone ({c},{m}) in degree {n}")
    orders = [m for _, m in d.cones]
    full = math.lcm(*orders) if orders else 1
    for i in range(len(orders)):
        rest = orders[:i] + orders[i + 1:]
        if (math.lcm(*rest) if rest else 1) != full:
            raise ValidationFailure("lcm", f"order {orders[i]} is lcm-essential")
    if d.g0 == 0 and full != n:
        raise ValidationFailure("lcm", f"lcm {full} != degree {n} with g0 = 0")
    total = sum((n // m) * c for c, m in d.cones)
    if total % n != 0:
        raise ValidationFailure("congruence", f"sum (n/m)c = {total} mod {n}")
    g = rh_genus(n, d.signature)
    if g is None:
        raise ValidationFailure("integrality", "genus is not a non-negative integer")
    return g


# ---------------------------------------------------------------------------
# text and JSON forms


def _format_cones(cones) -> str:
    parts = []
    i = 0
    while i < len(cones):
        j = i
        while j < len(cones) and cones[j] == cones[i]:
            j += 1
        c, m = cones[i]
        mult = j - i
        parts.append(f"({c},{m})" + (f"^[{mult}]" if mult > 1 else ""))
        i = j
    return ",".join(parts)


_CONE_RE = re.compile(r"\((\d+),(\d+)\)(?:\^\[(\d+)\])?")


def parse_cyclic(text: str) -> CyclicDataSet:
    """Parse e.g. ``(5,3;(1,5)^[2],(4,5)^[2])`` or ``(3,7;-)``."""
    m = re.fullmatch(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*;(.*)\)\s*", text)
    if m is None:
        raise ParseError(f"bad cyclic data set syntax: {text!r}")
    degree, g0, body = int(m.group(1)), int(m.group(2)), m.group(3).strip()
    cones = []
    if body != "-":
        pos = 0
        while pos < len(body):
            cm = _CONE_RE.match(body, pos)
            if cm is None:
                raise ParseError(f"bad cone list at {body[pos:]!r}")
            c, order = int(cm.group(1)), int(cm.group(2))
            mult = int(cm.group(3) or 1)
            cones.extend([(c, order)] * mult)
            pos = cm.end()
            if pos < len(body):
                if body[pos] != ",":
                    raise ParseError(f"expected ',' at {body[pos:]!r}")
                pos += 1
    return cyclic_data_set(degree, g0, cones)


def cyclic_to_json(d: CyclicDataSet) -> dict:
    cones = []
    i = 0
    while i < len(d.cones):
        j = i
        while j < len(d.cones) and d.cones[j] == d.cones[i]:
            j += 1
        cones.append({"c": d.cones[i][0], "m": d.cones[i][1], "mult": j - i})
        i = j
    return {"degree": d.degree, "genus0": d.g0, "cones": cones}


def cyclic_from_json(obj: dict) -> CyclicDataSet:
    cones = []
    for cone in obj["cones"]:
        cones.extend([(cone["c"], cone["m"])] * cone.get("mult", 1))
    return cyclic_data_set(obj["degree"], obj["genus0"], cones)
