import pytest

from sact.datasets import ALTERNATING, dataset, validate
from sact.errors import DegreeCapExceeded, MembershipError
from sact.groups import alt, centralizer_order, generates, sym
from sact.lifting import WLS, InvolutionDescent, decide_lift
from sact.orbifold import parse_cyclic, signature
from sact.perm import Perm, parse_perm
from sact.vectors import enumerate_weak_classes


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        generates(sym(11), [Perm.identity(11)], degree_cap=10)
    # raising the knob admits the degree
    assert not generates(sym(11), [Perm.identity(11)], degree_cap=11)


def test_membership_errors():
    with pytest.raises(MembershipError):
        centralizer_order(alt(5), parse_perm("(1 2)", 5))
    with pytest.raises(MembershipError):
        generates(alt(5), [parse_perm("(1 2)", 5)])


def test_no_symmetric_class_on_torus_with_one_cone():
    # the quotient shape behind the octahedral free-involution verdict
    res = enumerate_weak_classes(sym(4), 7, signatures=[signature(1, [2])])
    assert res.items == [] and res.complete


def test_alt4_positive_genus_quotient_without_shortcut():
    # quotient genus 2, no cones: the handle construction must close the
    # relation inside Alt(4) even though single commutators only fill V_4
    res = enumerate_weak_classes(alt(4), 13, signatures=[signature(2, [])])
    assert len(res.items) == 1
    vec = res.items[0].vector
    assert vec.long_relation_value().is_identity()
    assert validate(res.items[0].ds) == 13


def test_free_action_quotient_genus_5_extends_freely():
    # k = 4: the free degree-5 action on genus 241 extends to a free
    # symmetric action whose descent is the free involution on genus 5
    free_ds = dataset(ALTERNATING, 5, 5, [])
    assert validate(free_ds) == 241
    verdict = decide_lift(free_ds,
                          InvolutionDescent(parse_cyclic("(2,3;-)"),
                                            Perm.identity(0)))
    assert verdict.kind == WLS
    assert verdict.witness_symmetric.g0 == 3
    assert verdict.witness_symmetric.entries == ()
