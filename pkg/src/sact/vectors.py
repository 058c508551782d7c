"""Generating-vector search and reduction to weak conjugacy classes.

A generating vector realizes one group action: images of the elliptic
generators (one per cone point, order-exact) and of the handle generators,
subject to the long relation

    s_1 ... s_r [a_1,b_1] ... [a_g0,b_g0] = 1      with [a,b] = a b a^-1 b^-1

and joint generation of the whole group.

The search is keyed by conjugacy-class tuples first: per-position class
choices are pruned by exact class-product reachability, then representatives
are filled in by depth-first search with the last elliptic forced (quotient
genus 0) or the handles solved by an exhaustive commutator scan (genus >= 1).
Everything is deterministic: classes, elements, and emitted vectors follow a
fixed sort order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

from .datasets import (ALTERNATING, SYMMETRIC, GroupDataSet, dataset,
                       find_handle_witnesses, handle_chain_witness, validate)
from .errors import (BudgetExhausted, NotApplicable, ParseError,
                     PeriodNotRealizable, ValidationFailure)
from .groups import (ALT, ALT_C2, SYM, GroupSpec, commutator_witnesses,
                     flip_label, group_table, subgroup_order)
from .orbifold import Signature, enumerate_signatures
from .perm import Perm


@dataclass
class SearchBudget:
    """Node-count and wall-clock ceilings for the backtracking searches."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


class _Clock:
    """Shared tick counter for one search run."""

    __slots__ = ("budget", "nodes", "t0")

    def __init__(self, budget: Optional[SearchBudget]):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.t0 = time.monotonic()

    def tick(self):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExhausted(f"node ceiling {b.max_nodes} hit")
        if b.max_seconds is not None and (self.nodes & 0x3FF) == 0:
            if time.monotonic() - self.t0 > b.max_seconds:
                raise BudgetExhausted(f"wall-clock ceiling {b.max_seconds}s hit")


@dataclass(frozen=True)
class GeneratingVector:
    spec: GroupSpec
    sig: Signature
    elliptic: Tuple[Perm, ...]
    handles: Tuple[Tuple[Perm, Perm], ...]

    def long_relation_value(self) -> Perm:
        p = Perm.identity(self.spec.degree)
        for s in self.elliptic:
            p = p * s
        for a, b in self.handles:
            p = p * (a * b * a.inverse() * b.inverse())
        return p

    def all_images(self) -> list:
        out = list(self.elliptic)
        for a, b in self.handles:
            out.extend((a, b))
        return out


def validate_vector(v: GeneratingVector) -> bool:
    """Order-exactness, the long relation, and generation, all exact.

    Elliptic entries may sit in any order; their order multiset must match
    the signature periods (restrictions emit pair-first, not sorted).
    """
    if len(v.elliptic) != v.sig.r or len(v.handles) != v.sig.g0:
        return False
    if tuple(sorted(s.order() for s in v.elliptic)) != v.sig.periods:
        return False
    if not v.long_relation_value().is_identity():
        return False
    return subgroup_order(v.all_images(), v.spec.degree) == v.spec.order


def _feasible_end_ids(table, g0: int) -> frozenset:
    """Class ids the elliptic product may land in, given the handle budget."""
    spec = table.spec
    if g0 == 0:
        return frozenset({table.identity_class_id()})
    if g0 == 1:
        return table.commutator_class_ids()
    # g0 >= 2: the product must lie in the derived subgroup
    if spec.family == SYM:
        return frozenset(i for i, cl in enumerate(table.classes) if cl.rep.is_even())
    if spec.family == ALT and spec.n == 4:
        return frozenset(i for i, cl in enumerate(table.classes)
                         if cl.rep.order() in (1, 2))
    if spec.family == ALT_C2:
        ids = set()
        for i, cl in enumerate(table.classes):
            _, _, w = cl.key
            if w:
                continue
            if spec.n == 4 and cl.rep.order() not in (1, 2):
                continue
            ids.add(i)
        return frozenset(ids)
    return frozenset(range(len(table.classes)))


def _handle_assignments(spec: GroupSpec, g0: int, product: Perm,
                        elliptic: Sequence[Perm], clock: _Clock) -> Iterator[tuple]:
    """All handle tuples closing the long relation, with joint generation.

    g0 = 1 scans every commutator presentation of the product; g0 >= 2 pins
    the first handle pair to the standard generators (generation for free)
    and scans commutator presentations for the second pair.
    """
    if g0 == 0:
        if product.is_identity() and \
                subgroup_order(list(elliptic), spec.degree) == spec.order:
            yield ()
        return
    if g0 == 1:
        for r1, r2 in commutator_witnesses(spec, product):
            clock.tick()
            if subgroup_order(list(elliptic) + [r1, r2], spec.degree) == spec.order:
                # product = [r1, r2] closes s_1..s_r [a,b] = 1 with (a,b) = (r2, r1)
                yield ((r2, r1),)
        return
    s, t = spec.standard_generators()
    first = s * t * s.inverse() * t.inverse()
    target = first.inverse() * product.inverse()
    idpair = (Perm.identity(spec.degree), Perm.identity(spec.degree))
    for r1, r2 in commutator_witnesses(spec, target):
        clock.tick()
        yield ((s, t), (r1, r2)) + (idpair,) * (g0 - 2)


def _vectors_for_classes(spec: GroupSpec, g0: int, class_ids: Sequence[int],
                         clock: _Clock, normalize_first: bool = False
                         ) -> Iterator[GeneratingVector]:
    """All vectors whose i-th elliptic lies in the i-th listed class.

    With normalize_first, the first elliptic is pinned to its class
    representative; every solution is simultaneously conjugate to such a
    vector, so this is complete for existence questions.
    """
    table = group_table(spec)
    r = len(class_ids)
    periods = tuple(sorted(table.classes[c].rep.order() for c in class_ids))
    sig = Signature(g0, periods)
    end_ids = _feasible_end_ids(table, g0)

    reach = [None] * (r + 1)
    reach[r] = end_ids
    for i in range(r - 1, -1, -1):
        ok = set()
        for x in range(len(table.classes)):
            if table.product_support(x, class_ids[i]) & reach[i + 1]:
                ok.add(x)
        reach[i] = frozenset(ok)
    if table.identity_class_id() not in reach[0]:
        return

    identity = table.identity
    chosen: list = []

    def emit():
        product = identity
        for x in chosen:
            product = product * x
        for handles in _handle_assignments(spec, g0, product, chosen, clock):
            yield GeneratingVector(spec, sig, tuple(chosen), handles)

    def dfs(i: int, partial: Perm):
        clock.tick()
        if i == r:
            yield from emit()
            return
        if g0 == 0 and i == r - 1:
            forced = partial.inverse()
            if table.class_id(forced) == class_ids[i]:
                chosen.append(forced)
                yield from dfs(i + 1, identity)
                chosen.pop()
            return
        if normalize_first and i == 0:
            candidates = (table.classes[class_ids[0]].rep,)
        else:
            candidates = table.classes[class_ids[i]].elements
        for x in candidates:
            p2 = partial * x
            if table.class_id(p2) in reach[i + 1]:
                chosen.append(x)
                yield from dfs(i + 1, p2)
                chosen.pop()

    yield from dfs(0, identity)


def _class_tuples(table, periods: Sequence[int]):
    """Per-position class choices, non-decreasing inside equal-period blocks."""
    blocks = []
    for m, block in itertools.groupby(periods):
        size = len(list(block))
        ids = table.classes_by_order.get(m, [])
        blocks.append(list(itertools.combinations_with_replacement(ids, size)))
    for combo in itertools.product(*blocks):
        yield tuple(itertools.chain.from_iterable(combo))


def enumerate_vectors(spec: GroupSpec, sig: Signature,
                      budget: Optional[SearchBudget] = None
                      ) -> Iterator[GeneratingVector]:
    """All generating vectors for the signature, deterministically ordered.

    Raises PeriodNotRealizable when some period is not an element order.
    """
    orders = spec.element_orders()
    for m in sig.periods:
        if m not in orders:
            raise PeriodNotRealizable(f"{spec.name} has no element of order {m}")
    if sig.area_term() >= 0:
        raise ParseError(f"signature {sig} is not hyperbolic")
    table = group_table(spec)
    clock = _Clock(budget)
    for ids in _class_tuples(table, sig.periods):
        yield from _vectors_for_classes(spec, sig.g0, ids, clock)


def vectors_for_dataset(ds: GroupDataSet, budget: Optional[SearchBudget] = None
                        ) -> Iterator[GeneratingVector]:
    """Vectors whose positional classes match the data set's stored entries."""
    spec = ds.spec
    table = group_table(spec)
    ids = [table.class_id(rep) for rep in ds.expanded()]
    clock = _Clock(budget)
    return _vectors_for_classes(spec, ds.g0, ids, clock)


def resolved_representative(ds: GroupDataSet) -> GroupDataSet:
    """A fully valid data set in the same per-position classes.

    Canonical forms carry display representatives whose product need not be
    the identity; re-solving inside the stored classes recovers a realizable
    tuple (position for position, so cone indexing is preserved).  Raises the
    original failure when the class pattern is not realizable at all.
    """
    try:
        validate(ds)
        return ds
    except ValidationFailure as failure:
        if failure.condition not in ("product", "generation", "witness"):
            raise
        vec = next(vectors_for_dataset(ds), None)
        if vec is None:
            raise
        resolved = dataset_from_vector(vec)
        return GroupDataSet(ds.kind, ds.n, ds.g0, resolved.entries,
                            resolved.witnesses)


def materialize_vector(ds: GroupDataSet) -> GeneratingVector:
    """One concrete vector for a valid data set, handles included."""
    spec = ds.spec
    reps = ds.expanded()
    periods = tuple(sorted(rep.order() for rep in reps))
    sig = Signature(ds.g0, periods)
    if ds.g0 == 0:
        handles = ()
    elif ds.g0 == 1:
        pair = ds.witnesses or find_handle_witnesses(ds)
        if pair is None:
            raise NotApplicable("data set has no handle witnesses")
        handles = (pair,)
    else:
        chain = handle_chain_witness(ds)
        if chain is None:
            raise NotApplicable("handle relation unsatisfiable")
        (s, t), (r1, r2) = chain
        idpair = (Perm.identity(spec.degree), Perm.identity(spec.degree))
        handles = ((s, t), (r1, r2)) + (idpair,) * (ds.g0 - 2)
    # keep the stored entry order: the product relation depends on it
    vec = GeneratingVector(spec, sig, tuple(reps), handles)
    assert vec.long_relation_value().is_identity()
    return vec


# ---------------------------------------------------------------------------
# weak conjugacy classes


@dataclass(frozen=True)
class WeakClass:
    """One weak conjugacy class, with a witness vector.

    `ds` is filled for Sym/Alt; the A_n x C_2 family is reported at the
    vector level (`ds` is None) since its classes have no data-set form here.
    """

    spec: GroupSpec
    sig: Signature
    key: tuple
    vector: GeneratingVector
    ds: Optional[GroupDataSet]

    def sort_token(self) -> tuple:
        body = str(self.ds) if self.ds is not None else repr(self.key)
        return (self.sig.g0, self.sig.periods, body)


@dataclass
class WeakClassList:
    items: list = field(default_factory=list)
    complete: bool = True
    incomplete_signatures: list = field(default_factory=list)


def _multiset_key(table, ids: Sequence[int]) -> tuple:
    return tuple(sorted(table.classes[i].key for i in ids))


def _flip_key(spec: GroupSpec, key: tuple) -> tuple:
    if spec.family == SYM:
        return key
    if spec.family == ALT:
        return tuple(sorted((parts, flip_label(label)) for parts, label in key))
    return tuple(sorted((parts, flip_label(label), w) for parts, label, w in key))


def _canonical_key(spec: GroupSpec, table, ids: Sequence[int]) -> tuple:
    key = _multiset_key(table, ids)
    return min(key, _flip_key(spec, key))


def dataset_from_vector(vec: GeneratingVector) -> GroupDataSet:
    kind = ALTERNATING if vec.spec.family == ALT else SYMMETRIC
    witnesses = vec.handles[0] if vec.sig.g0 == 1 else None
    groups = []
    for rep in vec.elliptic:
        if groups and groups[-1][0] == rep:
            groups[-1][1] += 1
        else:
            groups.append([rep, 1])
    return dataset(kind, vec.spec.n, vec.sig.g0,
                   [(rep, mult) for rep, mult in groups], witnesses=witnesses)


def enumerate_weak_classes(spec: GroupSpec, g: int,
                           budget: Optional[SearchBudget] = None,
                           signatures: Optional[Sequence[Signature]] = None,
                           raise_on_budget: bool = False) -> WeakClassList:
    """All weak conjugacy classes of spec-actions at genus g.

    For Sym/Alt each class is returned as a GroupDataSet; class multisets
    related by the global split-class flip are identified.  For A_n x C_2
    the classes are vector orbits reduced by the same torsion-level key.
    """
    table = group_table(spec)
    clock = _Clock(budget)
    sigs = list(signatures) if signatures is not None else enumerate_signatures(spec, g)
    orders = spec.element_orders()
    result = WeakClassList()
    try:
        for sig in sigs:
            if any(m not in orders for m in sig.periods):
                continue
            seen = set()
            for ids in _class_tuples(table, sig.periods):
                key = _canonical_key(spec, table, ids)
                if key in seen:
                    continue
                seen.add(key)
                vec = next(_vectors_for_classes(spec, sig.g0, ids, clock,
                                                normalize_first=True), None)
                if vec is None:
                    continue
                ds = dataset_from_vector(vec) if spec.family in (ALT, SYM) else None
                result.items.append(WeakClass(spec, sig, key, vec, ds))
    except BudgetExhausted as exc:
        result.complete = False
        result.incomplete_signatures = [str(s) for s in sigs]
        if raise_on_budget:
            exc.partial = result
            raise
    result.items.sort(key=WeakClass.sort_token)
    return result


def shortcut_class_multiset(spec: GroupSpec, sig: Signature) -> list:
    """Quotient genus >= 2 shortcut: no vector search is needed.

    Every class multiset with matching orders is realizable for Alt(n >= 5)
    (the handles absorb any product), and for Sym(n >= 3) exactly when the
    forced product parity is even.  Returns the data sets directly.
    """
    if sig.g0 < 2:
        raise NotApplicable("shortcut needs quotient genus >= 2")
    if not (spec.family == ALT and spec.n >= 5) and not (spec.family == SYM and spec.n >= 3):
        raise NotApplicable(f"shortcut does not cover {spec.name}")
    orders = spec.element_orders()
    for m in sig.periods:
        if m not in orders:
            raise PeriodNotRealizable(f"{spec.name} has no element of order {m}")
    table = group_table(spec)
    kind = ALTERNATING if spec.family == ALT else SYMMETRIC
    out = []
    seen = set()
    for ids in _class_tuples(table, sig.periods):
        key = _canonical_key(spec, table, ids)
        if key in seen:
            continue
        seen.add(key)
        reps = [table.classes[i].rep for i in ids]
        if kind == SYMMETRIC:
            odd = sum(1 for rep in reps if not rep.is_even())
            if odd % 2 == 1:
                continue
        out.append(dataset(kind, spec.n, sig.g0, reps))
    out.sort(key=str)
    return out
