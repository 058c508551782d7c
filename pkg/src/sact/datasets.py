"""Alternating and symmetric data sets: validation, equivalence, canonical form.

A data set records one weak conjugacy class of a Sym(n)- or Alt(n)-action:
the quotient genus plus an ordered list of entries [rep, order; cycle type],
possibly with multiplicities.  Validation checks the defining conditions
(genus integrality, product relation, generation, parity, handle witnesses);
equivalence matches entries by cycle type, with the split-class dichotomy for
the alternating kind: over entries whose Sym-class splits in Alt, either all
matched pairs are Alt-conjugate or none are.

Text grammar: ``(n,g0;[(1 2)(3 4),2;2,2]^[2],[(1 2 3 4 5),5;5],...)`` with
``-`` for an empty entry list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Tuple

from .errors import KindMismatch, ParseError, ValidationFailure
from .groups import (ALT, SYM, GroupSpec, commutator_witness,
                     commutator_witnesses, flip_label, generates, group_table,
                     split_label)
from .orbifold import Signature, rh_genus
from .perm import CycleType, Perm, least_perm_of_type, parse_perm

ALTERNATING = "A"
SYMMETRIC = "S"

_LABEL_RANK = {"whole": 0, "plus": 1, "minus": 2}


@dataclass(frozen=True)
class Entry:
    """One cone-point entry: representative, order, cycle type, multiplicity."""

    rep: Perm
    order: int
    ctype: CycleType
    mult: int = 1


def make_entry(rep: Perm, mult: int = 1) -> Entry:
    return Entry(rep, rep.order(), rep.cycle_type(), mult)


@dataclass(frozen=True)
class GroupDataSet:
    kind: str  # ALTERNATING or SYMMETRIC
    n: int
    g0: int
    entries: Tuple[Entry, ...]
    witnesses: Optional[Tuple[Perm, Perm]] = None  # handle pair for g0 = 1

    @property
    def spec(self) -> GroupSpec:
        return GroupSpec(ALT if self.kind == ALTERNATING else SYM, self.n)

    @property
    def r(self) -> int:
        return sum(e.mult for e in self.entries)

    def expanded(self) -> list:
        """Entry representatives repeated by multiplicity, in stored order."""
        return [e.rep for e in self.entries for _ in range(e.mult)]

    def product(self) -> Perm:
        p = Perm.identity(self.n)
        for rep in self.expanded():
            p = p * rep
        return p

    def signature(self) -> Signature:
        periods = sorted(e.order for e in self.entries for _ in range(e.mult))
        return Signature(self.g0, tuple(periods))

    def labels(self) -> list:
        """Split-class tag per expanded entry (alternating kind only)."""
        return [split_label(rep) for rep in self.expanded()]

    def __str__(self) -> str:
        return format_dataset(self)


def dataset(kind: str, n: int, g0: int, reps_with_mult: Sequence,
            witnesses=None) -> GroupDataSet:
    """Build a data set from (rep, mult) pairs or bare reps."""
    entries = []
    for item in reps_with_mult:
        if isinstance(item, Entry):
            entries.append(item)
        elif isinstance(item, Perm):
            entries.append(make_entry(item))
        else:
            rep, mult = item
            entries.append(make_entry(rep, mult))
    return GroupDataSet(kind, n, g0, tuple(entries), witnesses)


# ---------------------------------------------------------------------------
# validation


def validate(ds: GroupDataSet, structure_only: bool = False) -> int:
    """Check every defining condition and return the genus (>= 2).

    Raises ValidationFailure tagged genus-integrality / order-mismatch /
    parity / product / generation / witness.  With structure_only the
    realizability clauses (product, generation, witnesses) are skipped;
    canonical forms are shape-checked this way, since their display
    representatives need not multiply to the identity.
    """
    spec = ds.spec
    for e in ds.entries:
        if e.mult < 1:
            raise ValidationFailure("order-mismatch", "multiplicity must be >= 1")
        if e.rep.degree != ds.n:
            raise ValidationFailure("order-mismatch", f"entry degree {e.rep.degree} != {ds.n}")
        if e.rep.is_identity():
            raise ValidationFailure("order-mismatch", "trivial entry")
        if e.order != e.rep.order() or e.ctype != e.rep.cycle_type():
            raise ValidationFailure("order-mismatch", f"declared data wrong on {e.rep}")
        if ds.kind == ALTERNATING and not e.rep.is_even():
            raise ValidationFailure("parity", f"odd entry {e.rep} in alternating data set")
    g = rh_genus(spec.order, ds.signature())
    if g is None or g < 2:
        raise ValidationFailure("genus-integrality", f"signature {ds.signature()}")
    if structure_only:
        return g

    reps = ds.expanded()
    if ds.g0 == 0:
        if not ds.product().is_identity():
            raise ValidationFailure("product", "entry product is not the identity")
        if not generates(spec, reps):
            raise ValidationFailure("generation", "entries do not generate the group")
    elif ds.g0 == 1:
        pair = ds.witnesses or find_handle_witnesses(ds)
        if pair is None:
            raise ValidationFailure("witness", "no handle pair closes the relation")
        w1, w2 = pair
        if ds.product() != w2 * w1 * w2.inverse() * w1.inverse():
            raise ValidationFailure("witness", "stored handle pair does not close the relation")
        if not generates(spec, reps + [w1, w2]):
            raise ValidationFailure("witness", "entries plus handles do not generate")
    else:
        if ds.kind == SYMMETRIC and not ds.product().is_even():
            raise ValidationFailure("parity", "entry product is odd with g0 >= 2")
        if ds.kind == ALTERNATING and ds.n == 4:
            # commutators of Alt(4) fill only V_4, so solvability needs a witness
            if handle_chain_witness(ds) is None:
                raise ValidationFailure("witness", "handle relation unsatisfiable in Alt(4)")
    return g


def find_handle_witnesses(ds: GroupDataSet):
    """Search a pair (w1, w2) with product = w2 w1 w2^-1 w1^-1 and joint
    generation; None when the exhaustive scan finds none."""
    spec = ds.spec
    reps = ds.expanded()
    target = ds.product()
    for w2, w1 in commutator_witnesses(spec, target):
        if generates(spec, reps + [w1, w2]):
            return (w1, w2)
    return None


def handle_chain_witness(ds: GroupDataSet):
    """For g0 >= 2: handle images ((s,t),(r1,r2),1,...) closing the long
    relation, with (s,t) the standard generating pair.  None if impossible."""
    spec = ds.spec
    s, t = spec.standard_generators()
    first = s * t * s.inverse() * t.inverse()
    target = first.inverse() * ds.product().inverse()
    wit = commutator_witness(spec, target)
    if wit is None:
        return None
    return ((s, t), wit)


# ---------------------------------------------------------------------------
# equivalence and canonical form


def _type_key(e: Entry) -> tuple:
    return (e.order, e.ctype.parts)


def _tagged_multiset(ds: GroupDataSet, flip: bool = False) -> tuple:
    out = []
    for e in ds.entries:
        label = split_label(e.rep)
        if flip:
            label = flip_label(label)
        out.extend([(e.order, e.ctype.parts, label)] * e.mult)
    return tuple(sorted(out, key=lambda t: (t[0], t[1], _LABEL_RANK[t[2]])))


def equivalent(a: GroupDataSet, b: GroupDataSet) -> bool:
    """Equivalence of data sets: cycle types match under some matching; for
    the alternating kind the split-class tags must agree entrywise either
    everywhere or nowhere (a single global flip)."""
    if a.kind != b.kind:
        raise KindMismatch(f"{a.kind} vs {b.kind}")
    if (a.n, a.g0) != (b.n, b.g0):
        return False
    if a.kind == SYMMETRIC:
        key = lambda ds: tuple(sorted((e.order, e.ctype.parts)
                                      for e in ds.entries for _ in range(e.mult)))
        return key(a) == key(b)
    mine = _tagged_multiset(a)
    return mine == _tagged_multiset(b) or mine == _tagged_multiset(b, flip=True)


def class_representative(kind: str, n: int, ctype: CycleType, label: str) -> Perm:
    """Least permutation in the named class.

    The least permutation of a cycle type lies in the "plus" class by
    definition; the "minus" representative is read off the group table.
    """
    base = least_perm_of_type(ctype)
    if kind == SYMMETRIC or label in ("whole", "plus"):
        return base
    table = group_table(GroupSpec(ALT, n))
    for cl in table.classes:
        if cl.key == (ctype.parts, "minus"):
            return cl.rep
    raise ValidationFailure("order-mismatch", f"no minus class for type {ctype}")


def canonical_form(ds: GroupDataSet) -> GroupDataSet:
    """Deterministic representative of the equivalence class.

    Entries are sorted by (order, type, tag); for the alternating kind the
    lexicographically smaller of the tag sequence and its global flip is
    chosen, and each representative is replaced by the least permutation in
    its named class.  Idempotent; equal exactly on equivalent data sets.
    The output is a comparison and display form: its representatives keep
    the entry classes but need not multiply to the identity.
    """
    validate(ds, structure_only=True)
    items = []
    for e in ds.entries:
        label = split_label(e.rep) if ds.kind == ALTERNATING else "whole"
        items.extend([(e.order, e.ctype, label)] * e.mult)

    def sorted_variant(flip):
        tagged = [(m, ct, flip_label(lb) if flip else lb) for (m, ct, lb) in items]
        return sorted(tagged, key=lambda t: (t[0], t[1].parts, _LABEL_RANK[t[2]]))

    plain, flipped = sorted_variant(False), sorted_variant(True)
    if ds.kind == ALTERNATING:
        rank = lambda seq: tuple(_LABEL_RANK[lb] for (_, _, lb) in seq)
        chosen = flipped if rank(flipped) < rank(plain) else plain
    else:
        chosen = plain

    entries = []
    for m, ct, label in chosen:
        rep = class_representative(ds.kind, ds.n, ct, label)
        if entries and entries[-1].rep == rep:
            entries[-1] = replace(entries[-1], mult=entries[-1].mult + 1)
        else:
            entries.append(make_entry(rep))
    return GroupDataSet(ds.kind, ds.n, ds.g0, tuple(entries), witnesses=None)


# ---------------------------------------------------------------------------
# text and JSON forms


def format_dataset(ds: GroupDataSet) -> str:
    if not ds.entries:
        return f"({ds.n},{ds.g0};-)"
    parts = []
    for e in ds.entries:
        body = f"[{e.rep},{e.order};{','.join(str(k) for k in e.ctype.parts)}]"
        parts.append(body + (f"^[{e.mult}]" if e.mult > 1 else ""))
    return f"({ds.n},{ds.g0};{','.join(parts)})"


_ENTRY_RE = re.compile(r"\[([^]]*)\](?:\^\[(\d+)\])?")


def parse_dataset(text: str, kind: str) -> GroupDataSet:
    """Parse the bracketed entry grammar; `kind` is ALTERNATING or SYMMETRIC."""
    if kind not in (ALTERNATING, SYMMETRIC):
        raise ParseError(f"unknown data set kind {kind!r}")
    m = re.fullmatch(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*;(.*)\)\s*", text)
    if m is None:
        raise ParseError(f"bad data set syntax: {text!r}")
    n, g0, body = int(m.group(1)), int(m.group(2)), m.group(3).strip()
    entries = []
    if body != "-":
        pos = 0
        while pos < len(body):
            em = _ENTRY_RE.match(body, pos)
            if em is None:
                raise ParseError(f"bad entry list at {body[pos:]!r}")
            inner, mult = em.group(1), int(em.group(2) or 1)
            head, _, types = inner.rpartition(";")
            perm_text, _, order_text = head.rpartition(",")
            if not head or not perm_text:
                raise ParseError(f"bad entry {inner!r}")
            rep = parse_perm(perm_text.strip(), n)
            declared_order = int(order_text)
            declared_type = tuple(sorted(int(k) for k in types.split(",") if k.strip()))
            entries.append(Entry(rep, declared_order, CycleType(declared_type, n), mult))
            pos = em.end()
            if pos < len(body):
                if body[pos] != ",":
                    raise ParseError(f"expected ',' between entries at {body[pos:]!r}")
                pos += 1
    return GroupDataSet(kind, n, g0, tuple(entries))


def dataset_to_json(ds: GroupDataSet) -> dict:
    obj = {
        "kind": ds.kind,
        "n": ds.n,
        "g0": ds.g0,
        "entries": [
            {
                "rep": str(e.rep),
                "order": e.order,
                "type": list(e.ctype.parts),
                "mult": e.mult,
                "label": split_label(e.rep) if ds.kind == ALTERNATING else "whole",
            }
            for e in ds.entries
        ],
    }
    if ds.witnesses is not None:
        obj["witnesses"] = [str(w) for w in ds.witnesses]
    return obj


def dataset_from_json(obj: dict) -> GroupDataSet:
    entries = []
    for e in obj["entries"]:
        rep = parse_perm(e["rep"], obj["n"])
        entries.append(Entry(rep, e["order"],
                             CycleType(tuple(sorted(e["type"])), obj["n"]),
                             e.get("mult", 1)))
    witnesses = None
    if obj.get("witnesses"):
        w1, w2 = (parse_perm(w, obj["n"]) for w in obj["witnesses"])
        witnesses = (w1, w2)
    return GroupDataSet(obj["kind"], obj["n"], obj["g0"], tuple(entries), witnesses)
