"""Index-2 descent of actions and liftability of involutions.

A symmetric action restricts to its alternating half; going the other way, an
involution on the quotient orbifold lifts to a degree-2 extension of an
alternating action.  The descent of one generating vector works cone by cone:

  * an elliptic inside the subgroup splits into two cone points of the same
    order, swapped by the descended involution;
  * an elliptic outside the subgroup of order m > 2 contributes one cone
    point of order m/2 (its square), fixed by the involution;
  * an elliptic outside of order 2 contributes nothing.

The descended involution itself is recorded as a degree-2 cyclic data set D
together with the induced permutation of the cone points.  Liftability is
decided by enumerating candidate extensions over Sym(n) and Alt(n) x C_2 on
the forced quotient signature and comparing descents.

Matching is at the level of cycle types (the Sym-class data); whether the
finer alternating split-class pattern also matches is reported on the
verdict as `strict_class_match`, not used to prune.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from .datasets import (ALTERNATING, SYMMETRIC, GroupDataSet, dataset,
                       make_entry, validate)
from .errors import (BudgetExhausted, GenusMismatch, NotIndexTwo,
                     ValidationFailure)
from .groups import (ALT, ALT_C2, SYM, GroupSpec, flip_label, group_table,
                     split_alt_c2, split_label)
from .orbifold import (CyclicDataSet, Signature, cyclic_data_set, rh_genus,
                       validate_cyclic)
from .perm import Perm
from .vectors import (GeneratingVector, SearchBudget, _Clock,
                      _vectors_for_classes, enumerate_weak_classes,
                      materialize_vector, resolved_representative)


@dataclass(frozen=True)
class InvolutionDescent:
    """Class of the descended involution plus its cone-point permutation."""

    d: CyclicDataSet
    perm: Perm  # acts on the cone-point indices 1..r of the alternating data set

    def __post_init__(self):
        if not (self.perm * self.perm).is_identity():
            raise ValidationFailure("admissibility", "cone permutation must be an involution")


@dataclass(frozen=True)
class Restriction:
    """Descent of one generating vector to the index-2 subgroup."""

    alt_ds: GroupDataSet          # valid representative, entries in cone order
    descent: InvolutionDescent
    genus: int


def _coset_data(spec: GroupSpec):
    """(membership test, projection to Alt(n), odd-coset conjugation)."""
    n = spec.n
    if spec.family == SYM:
        omega = Perm.from_cycles([(1, 2)], n)
        return (lambda p: p.is_even(),
                lambda p: p,
                lambda p: omega * p * omega)
    if spec.family == ALT_C2:
        return (lambda p: not split_alt_c2(p)[1],
                lambda p: split_alt_c2(p)[0],
                lambda p: split_alt_c2(p)[0])  # the swap is central
    raise NotIndexTwo(f"{spec.name} has no canonical index-2 subgroup here")


def index2_restrict(v: GeneratingVector) -> Restriction:
    """Descend a Sym(n) or Alt(n) x C_2 vector to its alternating half.

    Cone points are emitted in parent-entry order, pair first; the returned
    data set is re-solved inside the same per-position classes so that its
    product relation holds.
    """
    spec = v.spec
    in_sub, project, odd_conj = _coset_data(spec)
    n = spec.n
    alt_spec = GroupSpec(ALT, n)

    cones = []      # (representative in Alt(n), order)
    pairing = []    # 2-cycles of the induced cone permutation, 1-based
    ell = 0
    for s in v.elliptic:
        m = s.order()
        if in_sub(s):
            i = len(cones)
            cones.append((project(s), m))
            cones.append((odd_conj(s), m))
            pairing.append((i + 1, i + 2))
        else:
            ell += 1
            if m > 2:
                cones.append((project(s * s), m // 2))

    g = rh_genus(spec.order, v.sig)
    if g is None:
        raise ValidationFailure("genus-integrality", f"vector signature {v.sig}")
    chi = Fraction(2 - 2 * g, alt_spec.order) + sum(Fraction(m - 1, m) for _, m in cones)
    g0_prime = (2 - chi) / 2
    if g0_prime.denominator != 1 or g0_prime < 0:
        raise ValidationFailure("genus-integrality", f"descended quotient genus {g0_prime}")
    g0_prime = int(g0_prime)

    d = cyclic_data_set(2, v.sig.g0, [(1, 2)] * ell)
    if validate_cyclic(d) != g0_prime:
        raise ValidationFailure("congruence", "descended involution class is inconsistent")

    table = group_table(alt_spec)
    ids = [table.class_id(rep) for rep, _ in cones]
    resolved = next(_vectors_for_classes(alt_spec, g0_prime, ids, _Clock(None)), None)
    assert resolved is not None, "descended class tuple must be realizable"
    witnesses = resolved.handles[0] if g0_prime == 1 else None
    entries = tuple(make_entry(rep) for rep in resolved.elliptic)
    alt_ds = GroupDataSet(ALTERNATING, n, g0_prime, entries, witnesses)

    perm = Perm.from_cycles(pairing, len(cones))
    return Restriction(alt_ds, InvolutionDescent(d, perm), g)


def psi_map(ds: GroupDataSet, vector: Optional[GeneratingVector] = None) -> Restriction:
    """Descent of a symmetric data set: materialize a vector and restrict."""
    if ds.kind != SYMMETRIC:
        raise NotIndexTwo("psi_map descends symmetric data sets")
    ds = resolved_representative(ds)
    vec = vector if vector is not None else materialize_vector(ds)
    return index2_restrict(vec)


# ---------------------------------------------------------------------------
# admissible cone permutations and descent matching


def _slots(ds: GroupDataSet) -> list:
    """Per cone point: (order, cycle type parts, split tag)."""
    out = []
    for e in ds.entries:
        label = split_label(e.rep) if ds.kind == ALTERNATING else "whole"
        out.extend([(e.order, e.ctype.parts, label)] * e.mult)
    return out


def admissible_permutations(ds: GroupDataSet) -> list:
    """All involutive cone permutations matching entries of equal Sym-class.

    This is the coarse necessary condition; the alternating-class relation
    between matched entries is left to the verdict metadata.
    """
    slots = _slots(ds)
    r = len(slots)
    types = [(o, parts) for o, parts, _ in slots]
    out = []

    def build(remaining, cycles):
        if not remaining:
            out.append(Perm.from_cycles(cycles, r))
            return
        i = remaining[0]
        build(remaining[1:], cycles)  # i stays fixed
        for j in remaining[1:]:
            if types[i - 1] == types[j - 1]:
                rest = [x for x in remaining[1:] if x != j]
                build(rest, cycles + [(i, j)])

    build(list(range(1, r + 1)), [])
    return sorted(out)


def _type_bijections(src: list, dst: list) -> Iterator[Perm]:
    """Bijections src position -> dst position preserving (order, type)."""
    groups = {}
    for i, (o, parts, _) in enumerate(src):
        groups.setdefault((o, parts), ([], []))[0].append(i + 1)
    for j, (o, parts, _) in enumerate(dst):
        if (o, parts) not in groups:
            return
        groups[(o, parts)][1].append(j + 1)
    if any(len(a) != len(b) for a, b in groups.values()):
        return
    keys = sorted(groups)
    pools = [list(itertools.permutations(groups[k][1])) for k in keys]
    for combo in itertools.product(*pools):
        images = [0] * len(src)
        for k, perm_dst in zip(keys, combo):
            for i, j in zip(groups[k][0], perm_dst):
                images[i - 1] = j
        yield Perm(images)


def match_descent(target_ds: GroupDataSet, target_inv: InvolutionDescent,
                  cand: Restriction) -> Tuple[bool, bool]:
    """(loose, strict) match of a candidate descent against a target pair.

    Loose: same degree and quotient genus, equal cycle-type multisets, equal
    involution class D, and the cone permutations conjugate under some
    type-preserving matching of cone points.  Strict additionally requires
    the split-class tags to agree under that matching, up to a single global
    flip.
    """
    a, b = target_ds, cand.alt_ds
    if (a.n, a.g0) != (b.n, b.g0):
        return (False, False)
    sa, sb = _slots(a), _slots(b)
    if sorted((o, p) for o, p, _ in sa) != sorted((o, p) for o, p, _ in sb):
        return (False, False)
    if target_inv.d != cand.descent.d:
        return (False, False)
    loose = strict = False
    for pi in _type_bijections(sa, sb):
        # pi carries target cone i to candidate cone pi(i); it must
        # intertwine the two involutions: perm_cand = pi perm_target pi^-1
        if pi * target_inv.perm * pi.inverse() != cand.descent.perm:
            continue
        loose = True
        split_pairs = [(lab_a, sb[pi(i + 1) - 1][2])
                       for i, (_, _, lab_a) in enumerate(sa) if lab_a != "whole"]
        if all(x == y for x, y in split_pairs) or \
                all(x == flip_label(y) for x, y in split_pairs):
            strict = True
            break
    return (loose, strict)


# ---------------------------------------------------------------------------
# the lifting decision


WLS = "wls"
ALT_TIMES_C2 = "alt_times_c2"
NOT_LIFTABLE = "not_liftable"
UNDETERMINED = "undetermined"


@dataclass
class LiftVerdict:
    kind: str
    ds: GroupDataSet
    descent: InvolutionDescent
    witness_symmetric: Optional[GroupDataSet] = None
    witness_vector: Optional[GeneratingVector] = None
    strict_class_match: Optional[bool] = None
    normalized_perm: Optional[Perm] = None
    notes: tuple = ()

    def to_json(self) -> dict:
        obj = {
            "verdict": self.kind,
            "data_set": str(self.ds),
            "descent": {"d": str(self.descent.d), "perm": str(self.descent.perm)},
            "notes": list(self.notes),
        }
        if self.witness_symmetric is not None:
            obj["witness_symmetric"] = str(self.witness_symmetric)
        if self.witness_vector is not None:
            vec = self.witness_vector
            obj["witness_vector"] = {
                "group": vec.spec.name,
                "signature": str(vec.sig),
                "elliptic": [str(s) for s in vec.elliptic],
                "handles": [[str(x), str(y)] for x, y in vec.handles],
            }
        if self.strict_class_match is not None:
            obj["strict_class_match"] = self.strict_class_match
        if self.normalized_perm is not None:
            obj["normalized_perm"] = str(self.normalized_perm)
        return obj


def _check_descent(ds: GroupDataSet, inv: InvolutionDescent) -> None:
    slots = _slots(ds)
    r = len(slots)
    if inv.perm.degree != r:
        raise ValidationFailure("admissibility",
                                f"cone permutation degree {inv.perm.degree} != {r}")
    for i in range(1, r + 1):
        j = inv.perm(i)
        if (slots[i - 1][0], slots[i - 1][1]) != (slots[j - 1][0], slots[j - 1][1]):
            raise ValidationFailure("admissibility",
                                    f"cone {i} maps to a different class at {j}")
    if validate_cyclic(inv.d) != ds.g0:
        raise GenusMismatch("involution class lives on the wrong surface")


def _normalize_perm(ds: GroupDataSet, inv: InvolutionDescent):
    """Pair up surplus fixed cone points: an involution with k branch points
    cannot fix more than k cones.  Pairs are formed among equal-type fixed
    indices, lowest first."""
    slots = _slots(ds)
    k = len(inv.d.cones)
    perm = inv.perm
    notes = []
    while sum(1 for i in range(1, perm.degree + 1) if perm(i) == i) > k:
        fixed = [i for i in range(1, perm.degree + 1) if perm(i) == i]
        paired = None
        for i, j in itertools.combinations(fixed, 2):
            if (slots[i - 1][0], slots[i - 1][1]) == (slots[j - 1][0], slots[j - 1][1]):
                paired = (i, j)
                break
        if paired is None:
            return None, notes
        perm = perm * Perm.from_cycles([paired], perm.degree)
        notes.append(f"paired fixed cones {paired[0]},{paired[1]}: "
                     f"only {k} branch points are available")
    return perm, notes


def quotient_signature(ds: GroupDataSet, inv: InvolutionDescent) -> Signature:
    """Signature of the extension's quotient orbifold: swapped cone pairs
    keep their order, fixed cones double theirs, and leftover branch points
    of the involution add cones of order 2."""
    slots = _slots(ds)
    perm = inv.perm
    periods = []
    fixed = 0
    for i in range(1, perm.degree + 1):
        j = perm(i)
        if j == i:
            periods.append(2 * slots[i - 1][0])
            fixed += 1
        elif i < j:
            periods.append(slots[i - 1][0])
    periods.extend([2] * (len(inv.d.cones) - fixed))
    return Signature(inv.d.g0, tuple(sorted(periods)))


def decide_lift(ds: GroupDataSet, inv: InvolutionDescent,
                budget: Optional[SearchBudget] = None) -> LiftVerdict:
    """Decide whether the pair extends: a symmetric witness on the forced
    quotient signature wins, else an Alt(n) x C_2 vector, else not liftable
    (undetermined for n = 6, whose exotic extensions are out of scope)."""
    ds = resolved_representative(ds)
    g = validate(ds)
    _check_descent(ds, inv)
    n = ds.n
    perm, notes = _normalize_perm(ds, inv)
    if perm is None:
        return LiftVerdict(NOT_LIFTABLE, ds, inv, notes=tuple(
            notes + ["no realizable cone pairing for this involution class"]))
    normalized = perm if perm != inv.perm else None
    working = InvolutionDescent(inv.d, perm)
    sig = quotient_signature(ds, working)

    def candidates(spec):
        if any(m not in spec.element_orders() for m in sig.periods):
            return []
        found = enumerate_weak_classes(spec, g, budget, signatures=[sig],
                                       raise_on_budget=True)
        return found.items

    try:
        best = None
        for item in candidates(GroupSpec(SYM, n)):
            restriction = psi_map(item.ds, vector=item.vector)
            loose, strict = match_descent(ds, working, restriction)
            if loose:
                verdict = LiftVerdict(WLS, ds, inv, witness_symmetric=item.ds,
                                      strict_class_match=strict,
                                      normalized_perm=normalized, notes=tuple(notes))
                if strict:
                    return verdict
                best = best or verdict
        if best is not None:
            return best
        for item in candidates(GroupSpec(ALT_C2, n)):
            restriction = index2_restrict(item.vector)
            loose, strict = match_descent(ds, working, restriction)
            if loose:
                verdict = LiftVerdict(ALT_TIMES_C2, ds, inv,
                                      witness_vector=item.vector,
                                      strict_class_match=strict,
                                      normalized_perm=normalized, notes=tuple(notes))
                if strict:
                    return verdict
                best = best or verdict
        if best is not None:
            return best
    except BudgetExhausted as exc:
        return LiftVerdict(UNDETERMINED, ds, inv, normalized_perm=normalized,
                           notes=tuple(notes + [str(exc)]))
    if n == 6:
        return LiftVerdict(UNDETERMINED, ds, inv, normalized_perm=normalized,
                           notes=tuple(notes + ["degree 6 admits extensions beyond "
                                                "Sym(6) and Alt(6) x C_2"]))
    return LiftVerdict(NOT_LIFTABLE, ds, inv, normalized_perm=normalized,
                       notes=tuple(notes))


# ---------------------------------------------------------------------------
# self-normalizing test and free actions


@dataclass
class SelfNormalizingReport:
    ds: GroupDataSet
    by_condition: bool
    by_exhaustion: Optional[bool]
    extensions: list = field(default_factory=list)

    @property
    def overall(self) -> Optional[bool]:
        if self.by_condition or self.by_exhaustion:
            return True
        return self.by_exhaustion  # False or None (undetermined)


def involution_classes_on(genus0: int) -> list:
    """All degree-2 cyclic data sets of the given genus (involutions on
    the quotient surface of that genus)."""
    out = []
    q = 0
    while True:
        k = 2 + 2 * genus0 - 4 * q
        if k < 0:
            break
        try:
            d = cyclic_data_set(2, q, [(1, 2)] * k)
            if validate_cyclic(d) == genus0:
                out.append(d)
        except ValidationFailure:
            pass
        q += 1
    return out


def self_normalizing(ds: GroupDataSet, budget: Optional[SearchBudget] = None
                     ) -> SelfNormalizingReport:
    """Two routes, reported separately: the quick sufficient condition
    (sphere quotient, pairwise non-conjugate entries), and exhaustion of
    every admissible involution descent through decide_lift."""
    ds = resolved_representative(ds)
    slots = _slots(ds)
    by_condition = ds.g0 == 0 and len(
        {(o, parts) for o, parts, _ in slots}) == len(slots)

    undetermined = False
    extensions = []
    for d in involution_classes_on(ds.g0):
        k = len(d.cones)
        for perm in admissible_permutations(ds):
            fixed = sum(1 for i in range(1, perm.degree + 1) if perm(i) == i)
            if fixed > k:
                continue
            verdict = decide_lift(ds, InvolutionDescent(d, perm), budget)
            if verdict.kind == UNDETERMINED:
                undetermined = True
            elif verdict.kind != NOT_LIFTABLE:
                extensions.append(verdict)
    if extensions:
        by_exhaustion = False
    elif undetermined:
        by_exhaustion = None
    else:
        by_exhaustion = True
    return SelfNormalizingReport(ds, by_condition, by_exhaustion, extensions)


@dataclass
class FreeReport:
    n: int
    genus: int
    k: Optional[int]
    status: str  # "no_free_action" | "ok"
    free_alternating: Optional[GroupDataSet] = None
    extension: Optional[str] = None  # "free_sym" | "nonfree_sym" | "unknown_k1"
    witness_symmetric: Optional[GroupDataSet] = None
    witness_descent: Optional[CyclicDataSet] = None

    def to_json(self) -> dict:
        obj = {"n": self.n, "genus": self.genus, "k": self.k, "status": self.status}
        if self.free_alternating is not None:
            obj["free_alternating"] = str(self.free_alternating)
        if self.extension is not None:
            obj["extension"] = self.extension
        if self.witness_symmetric is not None:
            obj["witness_symmetric"] = str(self.witness_symmetric)
        if self.witness_descent is not None:
            obj["witness_descent"] = str(self.witness_descent)
        return obj


def free_action_analysis(n: int, g: int) -> FreeReport:
    """Free alternating actions exist exactly at g = 1 + k * n!/2.

    k even extends to a free symmetric action; odd k >= 3 to a branched one;
    k = 1 is reported unknown (it hinges on whether a torus quotient with two
    order-2 cones carries a symmetric action, which this tool does not rule
    on here).
    """
    half = math.factorial(n) // 2
    if g < 2 or (g - 1) % half != 0:
        return FreeReport(n, g, None, "no_free_action")
    k = (g - 1) // half
    free_ds = dataset(ALTERNATING, n, k + 1, [])
    validate(free_ds)
    report = FreeReport(n, g, k, "ok", free_alternating=free_ds)
    if k % 2 == 0:
        witness = dataset(SYMMETRIC, n, 1 + k // 2, [])
        validate(witness)
        report.extension = "free_sym"
        report.witness_symmetric = witness
        report.witness_descent = cyclic_data_set(2, 1 + k // 2, [])
    elif k >= 3:
        swap = Perm.from_cycles([(1, 2)], n)
        witness = dataset(SYMMETRIC, n, (k + 1) // 2, [(swap, 2)])
        validate(witness)
        report.extension = "nonfree_sym"
        report.witness_symmetric = witness
        report.witness_descent = cyclic_data_set(2, (k + 1) // 2, [(1, 2), (1, 2)])
    else:
        report.extension = "unknown_k1"
    return report
