import itertools
import math

import pytest

from sact.errors import MembershipError
from sact.groups import (GroupSpec, alt, alt_c2, are_conjugate,
                         centralizer_order, class_splits, commutator_witness,
                         conjugator_in_sym, embed_alt_c2, generates,
                         group_table, parse_group, split_alt_c2, split_label,
                         subgroup_order, sym)
from sact.perm import CycleType, Perm, parse_perm


def all_perms(n):
    return [Perm(im) for im in itertools.permutations(range(1, n + 1))]


def alt_orbit(x):
    """Oracle: the Alt-class of x by exhaustive even-conjugator search."""
    n = x.degree
    return {g * x * g.inverse() for g in all_perms(n) if g.is_even()}


# ---------------------------------------------------------------------------
# class splitting


def test_class_splits_examples():
    # orbit sizes computed by the exhaustive oracle
    assert class_splits(CycleType((5,), 5))
    assert len(alt_orbit(parse_perm("(1 2 3 4 5)", 5))) == 12
    assert not class_splits(CycleType((2, 2), 5))
    assert len(alt_orbit(parse_perm("(1 2)(3 4)", 5))) == 15
    assert class_splits(CycleType((3,), 4))
    assert len(alt_orbit(parse_perm("(1 2 3)", 4))) == 4


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_split_classes_partition_evenly(n):
    """Every split type breaks the Sym-class into two Alt-classes of equal
    size; non-split types keep one class.  Verified by orbit counting."""
    seen = set()
    for p in all_perms(n):
        if not p.is_even():
            continue
        t = p.cycle_type()
        if t in seen:
            continue
        seen.add(t)
        sym_class = {g * p * g.inverse() for g in all_perms(n)}
        orbit = alt_orbit(p)
        if class_splits(t):
            assert len(orbit) * 2 == len(sym_class)
            other = next(iter(sym_class - orbit))
            assert alt_orbit(other) == sym_class - orbit
        else:
            assert orbit == sym_class


# ---------------------------------------------------------------------------
# conjugacy


def test_are_conjugate_examples():
    a5 = alt(5)
    assert are_conjugate(a5, parse_perm("(1 2 3 4 5)", 5), parse_perm("(1 5 4 3 2)", 5))
    assert not are_conjugate(a5, parse_perm("(1 2 3 4 5)", 5), parse_perm("(1 3 5 2 4)", 5))
    assert are_conjugate(sym(5), parse_perm("(1 2)", 5), parse_perm("(4 5)", 5))


def test_are_conjugate_membership():
    with pytest.raises(MembershipError):
        are_conjugate(alt(5), parse_perm("(1 2)", 5), parse_perm("(1 2)", 5))


@pytest.mark.parametrize("spec", [alt(4), sym(4), alt(5), alt_c2(4)])
def test_are_conjugate_matches_class_partition(spec):
    """are_conjugate agrees with the table's class partition on all pairs,
    which makes it an equivalence relation by construction."""
    table = group_table(spec)
    elements = table.elements
    for a in elements:
        for b in elements:
            assert are_conjugate(spec, a, b) == (table.class_id(a) == table.class_id(b))


def test_are_conjugate_oracle_sweep_alt5():
    """Exhaustive even-conjugator oracle against the split-class decision."""
    a5 = alt(5)
    reps = [parse_perm(t, 5) for t in
            ["(1 2 3 4 5)", "(1 3 5 2 4)", "(1 2 3)", "(1 2)(3 4)"]]
    for a in reps:
        orbit = alt_orbit(a)
        for b in all_perms(5):
            if not b.is_even():
                continue
            assert are_conjugate(a5, a, b) == (b in orbit)


def test_conjugator_in_sym_is_deterministic_and_correct():
    a = parse_perm("(1 2 3)(4 5)", 6)
    b = parse_perm("(2 4 6)(1 3)", 6)
    c = conjugator_in_sym(a, b)
    assert c * a * c.inverse() == b
    assert conjugator_in_sym(a, parse_perm("(1 2)", 6)) is None


def test_split_label_reference():
    # the least permutation of a split type is the "plus" anchor
    assert split_label(parse_perm("(2 3 4)", 4)) == "plus"
    assert split_label(parse_perm("(1 2 3)", 4)) == "minus"
    assert split_label(parse_perm("(1 2)(3 4)", 4)) == "whole"


# ---------------------------------------------------------------------------
# centralizers and orbit-stabilizer


def test_centralizer_order_examples():
    assert centralizer_order(alt(5), parse_perm("(1 2 3 4 5)", 5)) == 5
    assert centralizer_order(alt(5), parse_perm("(1 2)(3 4)", 5)) == 4
    assert centralizer_order(sym(5), Perm.identity(5)) == 120


@pytest.mark.parametrize("spec", [alt(4), sym(4), alt(5), sym(5), alt(6), alt_c2(4)])
def test_orbit_stabilizer_identity(spec):
    table = group_table(spec)
    for cl in table.classes:
        assert centralizer_order(spec, cl.rep) * cl.size == spec.order


@pytest.mark.parametrize("spec", [alt(5), sym(4), alt_c2(4)])
def test_centralizer_order_against_scan(spec):
    table = group_table(spec)
    for cl in table.classes:
        scan = sum(1 for z in table.elements if z * cl.rep == cl.rep * z)
        assert centralizer_order(spec, cl.rep) == scan


# ---------------------------------------------------------------------------
# generation


def closure_order(gens):
    """Oracle: breadth-first multiplicative closure."""
    if not gens:
        return 1
    els = set(gens)
    frontier = list(els)
    while frontier:
        new = []
        for g in gens:
            for h in frontier:
                k = g * h
                if k not in els:
                    els.add(k)
                    new.append(k)
        frontier = new
    return len(els)


def test_generates_examples():
    assert generates(alt(5), [parse_perm("(1 2 3)", 5), parse_perm("(1 2 3 4 5)", 5)])
    assert not generates(alt(5), [parse_perm("(1 2 3)", 5)])
    assert generates(sym(4), [parse_perm("(1 2)", 4), parse_perm("(1 2 3 4)", 4)])


def test_subgroup_order_against_closure():
    cases = [
        [parse_perm("(1 2 3)", 5)],
        [parse_perm("(1 2 3)", 5), parse_perm("(3 4 5)", 5)],
        [parse_perm("(1 2)", 5), parse_perm("(1 2 3 4 5)", 5)],
        [parse_perm("(1 2)(3 4)", 6), parse_perm("(1 3 5)(2 4 6)", 6)],
        [parse_perm("(1 2 3 4)", 4), parse_perm("(1 3)", 4)],
        [],
    ]
    for gens in cases:
        degree = gens[0].degree if gens else 5
        assert subgroup_order(gens, degree) == closure_order(gens)


def test_standard_generators_generate():
    for spec in [sym(4), sym(5), alt(4), alt(5), alt(6), alt_c2(4), alt_c2(5)]:
        assert generates(spec, spec.standard_generators())


def test_membership_alt_c2():
    spec = alt_c2(4)
    inside = embed_alt_c2(parse_perm("(1 2 3)", 4), True)
    assert spec.contains(inside)
    a, w = split_alt_c2(inside)
    assert str(a) == "(1 2 3)" and w
    assert not spec.contains(parse_perm("(1 2)", 6))  # odd on the block
    assert not spec.contains(parse_perm("(4 5)", 6))  # moves the block into the tail


# ---------------------------------------------------------------------------
# commutator witnesses


def commutator_oracle(spec, target):
    """Oracle: literal exhaustive double loop."""
    table = group_table(spec)
    for a in table.elements:
        for b in table.elements:
            if a * b * a.inverse() * b.inverse() == target:
                return (a, b)
    return None


def test_every_alt5_element_is_a_commutator():
    table = group_table(alt(5))
    for x in table.elements:
        w = commutator_witness(alt(5), x)
        assert w is not None
        r1, r2 = w
        assert r1 * r2 * r1.inverse() * r2.inverse() == x


def test_alt4_three_cycles_are_not_commutators():
    assert commutator_witness(alt(4), parse_perm("(1 2 3)", 4)) is None
    assert commutator_oracle(alt(4), parse_perm("(1 2 3)", 4)) is None
    w = commutator_witness(alt(4), parse_perm("(1 2)(3 4)", 4))
    assert w is not None


def test_commutator_witness_sampled_alt6_alt7():
    for spec, texts in [(alt(6), ["(1 2 3 4 5)", "(1 2)(3 4)", "(1 2 3)(4 5 6)"]),
                        (alt(7), ["(1 2 3 4 5 6 7)", "(1 2)(3 4)"])]:
        for t in texts:
            x = parse_perm(t, spec.n)
            r1, r2 = commutator_witness(spec, x)
            assert r1 * r2 * r1.inverse() * r2.inverse() == x


def test_witness_agrees_with_oracle_on_alt4():
    table = group_table(alt(4))
    for x in table.elements:
        assert (commutator_witness(alt(4), x) is None) == \
               (commutator_oracle(alt(4), x) is None)


# ---------------------------------------------------------------------------
# specs


def test_parse_group():
    assert parse_group("A5") == alt(5)
    assert parse_group("S4") == sym(4)
    assert parse_group("AxC25") == alt_c2(5)
    assert parse_group("AxC25").degree == 7


def test_element_orders():
    assert sorted(sym(5).element_orders()) == [1, 2, 3, 4, 5, 6]
    assert sorted(alt(6).element_orders()) == [1, 2, 3, 4, 5]
    assert sorted(alt_c2(5).element_orders()) == [1, 2, 3, 5, 6, 10]
    assert sorted(alt_c2(4).element_orders()) == [1, 2, 3, 6]
