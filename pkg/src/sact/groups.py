"""Symmetric, alternating, and A_n x C_2 groups with exact class machinery.

A_n x C_2 is realized concretely inside Sym(n+2): the A_n part acts on
{1..n} and the central involution is the transposition (n+1 n+2).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DegreeCapExceeded, MembershipError, ParseError
from .perm import CycleType, Perm, least_perm_of_type

DEGREE_CAP = 10
# Element tables back the enumeration searches; groups above this order
# would need a different engine entirely.
TABLE_ORDER_CAP = 250_000

SYM, ALT, ALT_C2 = "S", "A", "AxC2"


@dataclass(frozen=True)
class GroupSpec:
    """One of Sym(n), Alt(n), Alt(n) x C_2."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in (SYM, ALT, ALT_C2):
            raise ParseError(f"unknown group family {self.family!r}")
        if self.family == SYM and self.n < 3:
            raise ParseError("Sym(n) requires n >= 3")
        if self.family in (ALT, ALT_C2) and self.n < 4:
            raise ParseError(f"{self.family}(n) requires n >= 4")

    @property
    def degree(self) -> int:
        return self.n + 2 if self.family == ALT_C2 else self.n

    @property
    def order(self) -> int:
        if self.family == SYM:
            return math.factorial(self.n)
        if self.family == ALT:
            return math.factorial(self.n) // 2
        return math.factorial(self.n)  # (n!/2) * 2

    @property
    def name(self) -> str:
        return f"{self.family}{self.n}"

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        if self.family == SYM:
            return True
        if self.family == ALT:
            return p.is_even()
        # ALT_C2: fixes {1..n} setwise (hence the tail too), even on the block
        n = self.n
        if any(p.apply(i) > n for i in range(1, n + 1)):
            return False
        a, _ = split_alt_c2(p)
        return a.is_even()

    def standard_generators(self) -> tuple:
        """A fixed generating pair: (1 2), (1 2 .. n) for Sym(n); (1 2 3) and
        the n- or (n-1)-cycle for Alt(n); for Alt(n) x C_2 the 3-cycle paired
        with the central swap plus the long Alt-cycle."""
        n = self.n
        if self.family == SYM:
            return (Perm.from_cycles([(1, 2)], n), Perm.from_cycles([tuple(range(1, n + 1))], n))
        sigma = Perm.from_cycles([(1, 2, 3)], n)
        if n % 2 == 1:
            tau = Perm.from_cycles([tuple(range(1, n + 1))], n)
        else:
            tau = Perm.from_cycles([tuple(range(2, n + 1))], n)
        if self.family == ALT:
            return (sigma, tau)
        return (embed_alt_c2(sigma, True), embed_alt_c2(tau, False))

    def element_orders(self) -> frozenset:
        """All element orders, computed from cycle types (no element table)."""
        if self.family == ALT_C2:
            base = GroupSpec(ALT, self.n).element_orders()
            return frozenset(base | {math.lcm(o, 2) for o in base})
        orders = set()
        for parts in _partitions(self.n):
            moved = tuple(sorted(k for k in parts if k >= 2))
            ct = CycleType(moved, self.n)
            if self.family == SYM or ct.is_even():
                orders.add(ct.order())
        return frozenset(orders)

    def __str__(self) -> str:
        return self.name


def sym(n: int) -> GroupSpec:
    return GroupSpec(SYM, n)


def alt(n: int) -> GroupSpec:
    return GroupSpec(ALT, n)


def alt_c2(n: int) -> GroupSpec:
    return GroupSpec(ALT_C2, n)


def parse_group(name: str) -> GroupSpec:
    name = name.strip()
    for prefix, family in (("AxC2", ALT_C2), ("A", ALT), ("S", SYM)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return GroupSpec(family, int(name[len(prefix):]))
    raise ParseError(f"bad group name {name!r}; expected e.g. A5, S5, AxC25")


def _partitions(n: int, largest: Optional[int] = None):
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def split_alt_c2(p: Perm) -> tuple:
    """Split an Alt(n) x C_2 element (degree n+2) into (A_n part, swapped?)."""
    n = p.degree - 2
    a = Perm(tuple(p.apply(i) for i in range(1, n + 1)))
    return a, p.apply(n + 1) == n + 2


def embed_alt_c2(a: Perm, swapped: bool) -> Perm:
    """Inverse of split_alt_c2."""
    n = a.degree
    tail = (n + 2, n + 1) if swapped else (n + 1, n + 2)
    return Perm(a.images + tail)


def require_member(spec: GroupSpec, p: Perm) -> None:
    if not spec.contains(p):
        raise MembershipError(f"{p} is not in {spec.name}")


# ---------------------------------------------------------------------------
# conjugacy


def conjugator_in_sym(a: Perm, b: Perm) -> Optional[Perm]:
    """Some c with c a c^-1 = b, or None when the cycle types differ.

    Cycles of equal length (fixed points included) are aligned in order of
    least element, which makes the choice deterministic.
    """
    if a.degree != b.degree:
        return None
    if a.cycle_type() != b.cycle_type():
        return None

    def full_cycles(p):
        moved = list(p.cycles())
        fixed = [(i,) for i in range(1, p.degree + 1) if p.apply(i) == i]
        return sorted(moved + fixed, key=lambda c: (len(c), c[0]))

    images = [0] * a.degree
    for ca, cb in zip(full_cycles(a), full_cycles(b)):
        for x, y in zip(ca, cb):
            images[x - 1] = y
    return Perm(images)


def class_splits(t: CycleType) -> bool:
    """Whether the Sym-class of this type breaks into two Alt-classes."""
    return t.splits()


def split_label(p: Perm) -> str:
    """Tag an even permutation: "whole", or "plus"/"minus" for split types.

    "plus" is the Alt-class of the lexicographically least permutation of
    the same cycle type.
    """
    t = p.cycle_type()
    if not t.splits():
        return "whole"
    c = conjugator_in_sym(least_perm_of_type(t), p)
    return "plus" if c.is_even() else "minus"


def flip_label(label: str) -> str:
    return {"plus": "minus", "minus": "plus"}.get(label, label)


def are_conjugate(spec: GroupSpec, a: Perm, b: Perm) -> bool:
    """Exact conjugacy in Sym(n), Alt(n) or Alt(n) x C_2."""
    require_member(spec, a)
    require_member(spec, b)
    if spec.family == SYM:
        return a.cycle_type() == b.cycle_type()
    if spec.family == ALT:
        if a.cycle_type() != b.cycle_type():
            return False
        if not a.cycle_type().splits():
            return True
        # all conjugators share one parity here: the Sym-centralizer is even
        return conjugator_in_sym(a, b).is_even()
    a0, wa = split_alt_c2(a)
    b0, wb = split_alt_c2(b)
    return wa == wb and are_conjugate(GroupSpec(ALT, spec.n), a0, b0)


def _odd_centralizer_element(p: Perm) -> Optional[Perm]:
    """An odd permutation commuting with p, if one exists.

    Exists exactly when p's class does not split: an even-length cycle of p,
    a swap of two equal-length odd cycles, or a swap of two fixed points.
    """
    n = p.degree
    cycles = list(p.cycles())
    for c in cycles:
        if len(c) % 2 == 0:
            return Perm.from_cycles([c], n)
    by_len = {}
    fixed = [i for i in range(1, n + 1) if p.apply(i) == i]
    if len(fixed) >= 2:
        return Perm.from_cycles([(fixed[0], fixed[1])], n)
    for c in cycles:
        if len(c) in by_len:
            other = by_len[len(c)]
            # swapping two odd-length cycles costs len(c) transpositions
            return Perm.from_cycles(list(zip(other, c)), n)
        by_len[len(c)] = c
    return None


def conjugator_in_group(spec: GroupSpec, a: Perm, b: Perm) -> Optional[Perm]:
    """Some c in the group with c a c^-1 = b, or None."""
    require_member(spec, a)
    require_member(spec, b)
    if spec.family == SYM:
        return conjugator_in_sym(a, b)
    if spec.family == ALT:
        c = conjugator_in_sym(a, b)
        if c is None:
            return None
        if c.is_even():
            return c
        z = _odd_centralizer_element(a)
        return c * z if z is not None else None
    a0, wa = split_alt_c2(a)
    b0, wb = split_alt_c2(b)
    if wa != wb:
        return None
    c0 = conjugator_in_group(GroupSpec(ALT, spec.n), a0, b0)
    return embed_alt_c2(c0, False) if c0 is not None else None


def centralizer_order(spec: GroupSpec, p: Perm) -> int:
    """Exact order of the centralizer, by the cycle-type formula."""
    require_member(spec, p)
    if spec.family == ALT_C2:
        a0, _ = split_alt_c2(p)
        return 2 * centralizer_order(GroupSpec(ALT, spec.n), a0)
    counts = {}
    for c in p.cycles():
        counts[len(c)] = counts.get(len(c), 0) + 1
    counts[1] = p.degree - sum(len(c) for c in p.cycles())
    total = 1
    for k, m in counts.items():
        total *= (k ** m) * math.factorial(m)
    if spec.family == SYM:
        return total
    return total if p.cycle_type().splits() else total // 2


# ---------------------------------------------------------------------------
# subgroup order (deterministic Schreier-Sims) and generation tests


def subgroup_order(gens: Sequence[Perm], degree: int) -> int:
    """Exact order of <gens> inside Sym(degree)."""
    identity = Perm.identity(degree)
    strong = [g for g in gens if g != identity]
    if not strong:
        return 1
    base: list = []

    def level_gens(i):
        return [g for g in strong if all(g.apply(b) == b for b in base[:i])]

    def extend_base(g):
        for x in range(1, degree + 1):
            if g.apply(x) != x and x not in base:
                base.append(x)
                return

    def transversal(i, gens_i):
        beta = base[i]
        table = {beta: identity}
        frontier = [beta]
        while frontier:
            nxt = []
            for point in frontier:
                u = table[point]
                for g in gens_i:
                    q = g.apply(point)
                    if q not in table:
                        table[q] = g * u
                        nxt.append(q)
            frontier = nxt
        return table

    def sift(g, tables):
        for i, table in enumerate(tables):
            img = g.apply(base[i])
            u = table.get(img)
            if u is None:
                return g, i
            g = u.inverse() * g
        return g, len(tables)

    for g in strong:
        if all(g.apply(b) == b for b in base):
            extend_base(g)

    while True:
        gens_per_level = [level_gens(i) for i in range(len(base))]
        tables = [transversal(i, gens_per_level[i]) for i in range(len(base))]
        residue_found = False
        for i in range(len(base)):
            for point, u in tables[i].items():
                for g in gens_per_level[i]:
                    schreier = tables[i][g.apply(point)].inverse() * g * u
                    if schreier == identity:
                        continue
                    residue, _ = sift(schreier, tables)
                    if residue != identity:
                        strong.append(residue)
                        if all(residue.apply(b) == b for b in base):
                            extend_base(residue)
                        residue_found = True
                        break
                if residue_found:
                    break
            if residue_found:
                break
        if not residue_found:
            order = 1
            for table in tables:
                order *= len(table)
            return order


def generates(spec: GroupSpec, elems: Iterable[Perm], degree_cap: int = DEGREE_CAP) -> bool:
    """Whether the given elements generate the whole group.  Exact."""
    elems = list(elems)
    for p in elems:
        require_member(spec, p)
    if spec.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {spec.degree} above cap {degree_cap}")
    return subgroup_order(elems, spec.degree) == spec.order


# ---------------------------------------------------------------------------
# element tables and conjugacy classes


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class of a group table."""

    rep: Perm
    elements: tuple
    key: tuple  # family-specific class invariant, e.g. (type, label)

    @property
    def size(self) -> int:
        return len(self.elements)


class GroupTable:
    """Explicit element list plus conjugacy classes, built once per spec."""

    def __init__(self, spec: GroupSpec):
        if spec.order > TABLE_ORDER_CAP:
            raise DegreeCapExceeded(
                f"{spec.name} has order {spec.order}, above the element-table cap")
        self.spec = spec
        self.identity = Perm.identity(spec.degree)
        self.elements = tuple(sorted(self._build_elements()))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.classes = self._build_classes()
        self._class_of = {}
        for ci, cl in enumerate(self.classes):
            for p in cl.elements:
                self._class_of[p] = ci
        self.classes_by_order = {}
        for ci, cl in enumerate(self.classes):
            self.classes_by_order.setdefault(cl.rep.order(), []).append(ci)
        self._support_cache = {}
        self._commutator_class_ids = None

    def _build_elements(self):
        spec = self.spec
        if spec.family == ALT_C2:
            alt_elems = [Perm(im) for im in itertools.permutations(range(1, spec.n + 1))]
            alt_elems = [p for p in alt_elems if p.is_even()]
            return [embed_alt_c2(a, w) for a in alt_elems for w in (False, True)]
        perms = (Perm(im) for im in itertools.permutations(range(1, spec.n + 1)))
        if spec.family == SYM:
            return list(perms)
        return [p for p in perms if p.is_even()]

    def class_key(self, p: Perm) -> tuple:
        spec = self.spec
        if spec.family == SYM:
            return (p.cycle_type().parts,)
        if spec.family == ALT:
            return (p.cycle_type().parts, split_label(p))
        a0, w = split_alt_c2(p)
        return (a0.cycle_type().parts, split_label(a0), w)

    def _build_classes(self):
        buckets = {}
        for p in self.elements:
            buckets.setdefault(self.class_key(p), []).append(p)
        classes = []
        for key in sorted(buckets):
            elems = tuple(sorted(buckets[key]))
            classes.append(ConjClass(rep=elems[0], elements=elems, key=key))
        return classes

    def class_id(self, p: Perm) -> int:
        return self._class_of[p]

    def class_of(self, p: Perm) -> ConjClass:
        return self.classes[self._class_of[p]]

    def centralizer(self, p: Perm) -> tuple:
        return tuple(z for z in self.elements if z * p == p * z)

    def product_support(self, i: int, j: int) -> frozenset:
        """Class ids reachable as products: {class(a*b) : a in C_i, b in C_j}."""
        try:
            return self._support_cache[(i, j)]
        except KeyError:
            rep = self.classes[i].rep
            out = frozenset(self._class_of[rep * b] for b in self.classes[j].elements)
            self._support_cache[(i, j)] = out
            return out

    def support_after(self, ids: frozenset, j: int) -> frozenset:
        out = set()
        for i in ids:
            out |= self.product_support(i, j)
        return frozenset(out)

    def commutator_class_ids(self) -> frozenset:
        """Class ids of single commutators [a, b]."""
        if self._commutator_class_ids is None:
            found = set()
            for cl in self.classes:
                a = cl.rep
                a_inv = a.inverse()
                for b in self.elements:
                    found.add(self._class_of[a * b * a_inv * b.inverse()])
            self._commutator_class_ids = frozenset(found)
        return self._commutator_class_ids

    def identity_class_id(self) -> int:
        return self._class_of[self.identity]


@functools.lru_cache(maxsize=None)
def group_table(spec: GroupSpec) -> GroupTable:
    return GroupTable(spec)


# ---------------------------------------------------------------------------
# commutator witnesses


def commutator_witness(spec: GroupSpec, target: Perm) -> Optional[tuple]:
    """A pair (r1, r2) with r1 r2 r1^-1 r2^-1 = target, or None.

    The scan over r2 is exhaustive, so None is a proof of absence.
    """
    require_member(spec, target)
    for r1, r2 in commutator_witnesses(spec, target):
        return (r1, r2)
    return None


def commutator_witnesses(spec: GroupSpec, target: Perm):
    """All commutator presentations of target, lazily, in deterministic order.

    [r1, r2] = target is solved as r1 r2 r1^-1 = target * r2, so for each r2
    the candidates r1 run over one conjugator times the centralizer of r2.
    """
    require_member(spec, target)
    table = group_table(spec)
    for r2 in table.elements:
        c = target * r2
        if table.class_id(c) != table.class_id(r2):
            continue
        c0 = conjugator_in_group(spec, r2, c)
        if c0 is None:
            continue
        for z in table.centralizer(r2):
            r1 = c0 * z
            if spec.contains(r1):
                yield (r1, r2)
