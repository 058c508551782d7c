"""Fixed-point counts, cyclic factors, weak generation, and obstruction sweeps.

The fixed-point count of an element x of order m at rotation unit u is

    |F_x(u, m)| = |C_H(x)| * sum over entries i with m | m_i and
                  x ~_H rep_i^(m_i*u/m) of 1/m_i,

an exact rational that must come out a non-negative integer.  The cyclic
factor of sigma unwinds these counts down the divisor lattice of d = |sigma|:
processing divisors t of d in decreasing order,

    (d/t) * mult[t][u] = |F_(sigma^(d/t))(u, t)|
                         - sum over t | t' | d, t' != t, u' = u (mod t') ...
                           of mult[t'][u']

and each cone pair is (u^-1 mod t, t) with that multiplicity.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .datasets import GroupDataSet, validate
from .errors import (GenusMismatch, MembershipError, NegativeMultiplicityError,
                     NonIntegralError)
from .groups import (GroupSpec, are_conjugate, centralizer_order, group_table,
                     require_member, subgroup_order)
from .orbifold import CyclicDataSet, cyclic_data_set, validate_cyclic
from .perm import Perm
from .vectors import SearchBudget, WeakClassList, enumerate_weak_classes


def fixed_point_count(ds: GroupDataSet, x: Perm, u: int, m: int) -> int:
    """Number of fixed points of x with rotation unit u, read off the entries."""
    spec = ds.spec
    require_member(spec, x)
    if x.order() != m:
        raise MembershipError(f"{x} has order {x.order()}, not {m}")
    if math.gcd(u, m) != 1:
        raise NonIntegralError(f"u = {u} is not a unit mod {m}")
    total = Fraction(0)
    for e in ds.entries:
        if e.order % m != 0:
            continue
        power = e.rep ** (e.order * u // m)
        if are_conjugate(spec, x, power):
            total += Fraction(e.mult, e.order)
    count = centralizer_order(spec, x) * total
    if count.denominator != 1:
        raise NonIntegralError(f"fixed-point count {count} for {x}")
    return int(count)


@functools.lru_cache(maxsize=4096)
def _structural_genus(ds: GroupDataSet) -> int:
    return validate(ds, structure_only=True)


def fixed_point_profile(ds: GroupDataSet, sigma: Perm) -> dict:
    """All fixed-point counts of the powers of sigma: {(t, u): count} over
    divisors t >= 2 of the order and units u mod t.  A class function."""
    require_member(ds.spec, sigma)
    d = sigma.order()
    out = {}
    for t in range(2, d + 1):
        if d % t != 0:
            continue
        power = sigma ** (d // t)
        for u in range(1, t):
            if math.gcd(u, t) == 1:
                out[(t, u)] = fixed_point_count(ds, power, u, t)
    return out


def cyclic_factor(ds: GroupDataSet, sigma: Perm) -> CyclicDataSet:
    """Cyclic data set of the action restricted to <sigma>.

    Depends only on the entry classes; the data set is shape-checked, the
    realizability clauses being the caller's business.
    """
    spec = ds.spec
    require_member(spec, sigma)
    d = sigma.order()
    if d == 1:
        raise MembershipError("cyclic factor needs a non-trivial element")
    g = _structural_genus(ds)

    divisors = sorted((t for t in range(2, d + 1) if d % t == 0), reverse=True)
    mult: dict = {}
    for t in divisors:
        power = sigma ** (d // t)
        mult[t] = {}
        for u in range(1, t):
            if math.gcd(u, t) != 1:
                continue
            count = Fraction(fixed_point_count(ds, power, u, t))
            for t2 in divisors:
                if t2 == t or t2 % t != 0:
                    continue
                for u2, m2 in mult[t2].items():
                    if u2 % t == u:
                        count -= m2
            value = count * Fraction(t, d)
            if value.denominator != 1:
                raise NonIntegralError(f"multiplicity {value} at (u={u}, t={t})")
            if value < 0:
                raise NegativeMultiplicityError(f"multiplicity {value} at (u={u}, t={t})")
            mult[t][u] = int(value)

    cones = []
    for t in divisors:
        for u, k in sorted(mult[t].items()):
            if k:
                cones.extend([(pow(u, -1, t), t)] * k)
    factor = cyclic_data_set(d, _quotient_genus(g, d, cones), cones)
    assert validate_cyclic(factor) == g
    return factor


def _quotient_genus(g: int, d: int, cones: Sequence) -> int:
    chi = Fraction(2 - 2 * g, d) + sum(Fraction(t - 1, t) for _, t in cones)
    g0 = (Fraction(2) - chi) / 2
    if g0.denominator != 1 or g0 < 0:
        raise NonIntegralError(f"quotient genus {g0}")
    return int(g0)


def standard_factors(ds: GroupDataSet) -> tuple:
    """Cyclic factors of the standard generating pair."""
    s, t = ds.spec.standard_generators()
    return (cyclic_factor(ds, s), cyclic_factor(ds, t))


# ---------------------------------------------------------------------------
# weak generation


@dataclass(frozen=True)
class GenerationWitness:
    ds: GroupDataSet
    sigma: Perm
    tau: Perm


def weakly_generates(d_f: CyclicDataSet, d_g: CyclicDataSet, spec: GroupSpec,
                     budget: Optional[SearchBudget] = None,
                     classes: Optional[WeakClassList] = None):
    """A witness (data set, sigma, tau) with the prescribed cyclic factors and
    <sigma, tau> the whole group, or None after a complete sweep.

    Raises GenusMismatch up front and BudgetExhausted (never a false None)
    when the class enumeration could not finish.
    """
    genus_f, genus_g = validate_cyclic(d_f), validate_cyclic(d_g)
    if genus_f != genus_g:
        raise GenusMismatch(f"genus {genus_f} vs {genus_g}")
    orders = spec.element_orders()
    if d_f.degree not in orders or d_g.degree not in orders:
        return None
    if classes is None:
        classes = enumerate_weak_classes(spec, genus_f, budget, raise_on_budget=True)
    table = group_table(spec)
    for item in classes.items:
        ds = item.ds
        sigma_classes = [cl for cl in table.classes
                         if cl.rep.order() == d_f.degree
                         and cyclic_factor(ds, cl.rep) == d_f]
        if not sigma_classes:
            continue
        tau_ok = {ci for ci, cl in enumerate(table.classes)
                  if cl.rep.order() == d_g.degree
                  and cyclic_factor(ds, cl.rep) == d_g}
        if not tau_ok:
            continue
        for s_class in sigma_classes:
            sigma = s_class.rep
            seen = set()
            centralizer = table.centralizer(sigma)
            for tau in table.elements:
                if table.class_id(tau) not in tau_ok or tau in seen:
                    continue
                seen.update(z * tau * z.inverse() for z in centralizer)
                if subgroup_order([sigma, tau], spec.degree) == spec.order:
                    return GenerationWitness(ds, sigma, tau)
    return None


# ---------------------------------------------------------------------------
# order bounds and obstructions


def max_element_order(spec: GroupSpec) -> int:
    """Largest element order, by the partition sweep (no element table)."""
    return max(spec.element_orders())


def max_order_bound(spec: GroupSpec, g: int,
                    budget: Optional[SearchBudget] = None) -> dict:
    """Exact largest element order plus the Hurwitz-side numbers and a
    sweep certificate that no action at genus g exceeds it."""
    landau = max_element_order(spec)
    classes = enumerate_weak_classes(spec, g, budget, raise_on_budget=True)
    observed = max(spec.element_orders()) if classes.items else 0
    certified = observed <= landau
    return {
        "group": spec.name,
        "genus": g,
        "landau": landau,
        "certified": certified,
        "group_order": spec.order,
        "hurwitz_order_bound": 84 * (g - 1),
        "order_over_landau": Fraction(spec.order, landau),
        "genus_over_landau": Fraction(g, landau),
        "classes": len(classes.items),
    }


@dataclass
class ObstructionReport:
    spec: GroupSpec
    genus: int
    irreducible: list = field(default_factory=list)  # (ds, element, factor)
    hyperelliptic: list = field(default_factory=list)
    factor_tables: list = field(default_factory=list)  # (ds, [(rep, factor)])
    classes_swept: int = 0

    @property
    def clean(self) -> bool:
        return not self.irreducible and not self.hyperelliptic

    def to_json(self) -> dict:
        def row(entry):
            ds, x, factor = entry
            return {"data_set": str(ds), "element": str(x), "factor": str(factor)}
        return {
            "group": self.spec.name,
            "genus": self.genus,
            "classes_swept": self.classes_swept,
            "irreducible": [row(e) for e in self.irreducible],
            "hyperelliptic": [row(e) for e in self.hyperelliptic],
            "factor_tables": [
                {"data_set": str(ds),
                 "factors": [{"element": str(x), "factor": str(f)} for x, f in rows]}
                for ds, rows in self.factor_tables
            ],
            "clean": self.clean,
        }


def obstruction_report(spec: GroupSpec, g: int,
                       budget: Optional[SearchBudget] = None,
                       classes: Optional[WeakClassList] = None) -> ObstructionReport:
    """Sweep every element class of every weak class at genus g, flagging
    irreducible factors (sphere quotient, three cones) and the hyperelliptic
    involution factor (2,0;(1,2)^[2g+2])."""
    if classes is None:
        classes = enumerate_weak_classes(spec, g, budget, raise_on_budget=True)
    table = group_table(spec)
    hyper = cyclic_data_set(2, 0, [(1, 2)] * (2 * g + 2))
    report = ObstructionReport(spec, g)
    for item in classes.items:
        report.classes_swept += 1
        rows = []
        for cl in table.classes:
            if cl.rep.is_identity():
                continue
            factor = cyclic_factor(item.ds, cl.rep)
            rows.append((cl.rep, factor))
            if factor.g0 == 0 and len(factor.cones) == 3:
                report.irreducible.append((item.ds, cl.rep, factor))
            if factor == hyper:
                report.hyperelliptic.append((item.ds, cl.rep, factor))
        report.factor_tables.append((item.ds, rows))
    return report
