import itertools

import pytest

from golden import (CUBIC_A_PRINTED, CUBIC_A_VALID, ICOSAHEDRAL_A,
                    OCTAHEDRAL_A, TETRAHEDRAL_A)
from sact.datasets import (ALTERNATING, SYMMETRIC, GroupDataSet,
                           canonical_form, dataset, dataset_from_json,
                           dataset_to_json, equivalent, find_handle_witnesses,
                           format_dataset, parse_dataset, validate)
from sact.errors import KindMismatch, ValidationFailure
from sact.groups import group_table
from sact.perm import Perm, parse_perm


def icosa():
    return parse_dataset(ICOSAHEDRAL_A, ALTERNATING)


def test_icosahedral_validates_to_19():
    assert validate(icosa()) == 19


def test_octahedral_validates_with_witness():
    ds = parse_dataset(OCTAHEDRAL_A, ALTERNATING)
    assert validate(ds) == 7
    w1, w2 = find_handle_witnesses(ds)
    assert ds.product() == w2 * w1 * w2.inverse() * w1.inverse()


def test_tetrahedral_and_table_rows_validate():
    assert validate(parse_dataset(TETRAHEDRAL_A, ALTERNATING)) == 3
    assert validate(parse_dataset(CUBIC_A_VALID, ALTERNATING)) == 5


def test_product_failure():
    # drop one entry from the tetrahedral set: the product is no longer 1
    broken = parse_dataset(
        "(4,0;[(1 2)(3 4),2;2,2]^[2],[(2 4 3),3;3]^[2])", ALTERNATING)
    with pytest.raises(ValidationFailure) as err:
        validate(broken)
    assert err.value.condition in ("product", "genus-integrality")


def test_generation_failure():
    inside_v4 = dataset(ALTERNATING, 4, 0, [
        (parse_perm("(1 2)(3 4)", 4), 2),
        (parse_perm("(1 3)(2 4)", 4), 2),
        (parse_perm("(1 4)(2 3)", 4), 2),
    ])
    # product is trivial and the genus works out, but only V_4 is generated
    with pytest.raises(ValidationFailure) as err:
        validate(inside_v4)
    assert err.value.condition == "generation"


def test_order_mismatch_and_parity():
    with pytest.raises(ValidationFailure) as err:
        validate(parse_dataset("(5,0;[(1 2)(3 4),3;2,2]^[2],[(1 5 4 3 2),5;5],"
                               "[(1 2 3 4 5),5;5])", ALTERNATING))
    assert err.value.condition == "order-mismatch"
    with pytest.raises(ValidationFailure) as err:
        validate(parse_dataset("(5,0;[(1 2),2;2]^[2],[(1 5 4 3 2),5;5],"
                               "[(1 2 3 4 5),5;5])", ALTERNATING))
    assert err.value.condition == "parity"


def test_symmetric_g0_2_parity():
    even = parse_dataset("(6,2;[(1 2)(3 4)(5 6),2;2,2,2]^[2])", SYMMETRIC)
    assert validate(even) == 1 + 3 * 720 // 2
    odd = parse_dataset("(4,2;[(1 2),2;2])", SYMMETRIC)
    with pytest.raises(ValidationFailure) as err:
        validate(odd)
    assert err.value.condition == "parity"


def test_equivalence_worked_examples():
    ds = icosa()
    swapped = dataset(ALTERNATING, 5, 0, [
        (parse_perm("(1 2)(3 4)", 5), 2),
        parse_perm("(1 2 3 4 5)", 5),
        parse_perm("(1 5 4 3 2)", 5),
    ])
    assert equivalent(ds, swapped)

    both_squared = dataset(ALTERNATING, 5, 0, [
        (parse_perm("(1 2)(3 4)", 5), 2),
        parse_perm("(1 5 4 3 2)", 5) ** 2,
        parse_perm("(1 2 3 4 5)", 5) ** 2,
    ])
    assert equivalent(ds, both_squared)

    one_squared = dataset(ALTERNATING, 5, 0, [
        (parse_perm("(1 2)(3 4)", 5), 2),
        parse_perm("(1 5 4 3 2)", 5),
        parse_perm("(1 2 3 4 5)", 5) ** 2,
    ])
    assert not equivalent(ds, one_squared)


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        equivalent(icosa(), parse_dataset(ICOSAHEDRAL_A, SYMMETRIC))


def test_equivalence_is_an_equivalence_relation():
    ds = icosa()
    variants = [ds]
    table = group_table(ds.spec)
    for h in [table.elements[7], table.elements[23], table.elements[41]]:
        variants.append(dataset(ALTERNATING, 5, 0, [
            (h * e.rep * h.inverse(), e.mult) for e in ds.entries]))
    variants.append(dataset(ALTERNATING, 5, 0, [
        (e.rep ** 2 if e.order == 5 else e.rep, e.mult) for e in ds.entries]))
    for a in variants:
        assert equivalent(a, a)
        for b in variants:
            assert equivalent(a, b) == equivalent(b, a)
            for c in variants:
                if equivalent(a, b) and equivalent(b, c):
                    assert equivalent(a, c)


def test_global_conjugation_preserves_validity_and_class():
    ds = icosa()
    table = group_table(ds.spec)
    for h in table.elements[::17]:
        conj = dataset(ALTERNATING, 5, 0,
                       [(h * e.rep * h.inverse(), e.mult) for e in ds.entries])
        assert validate(conj) == 19
        assert equivalent(ds, conj)
        assert canonical_form(conj) == canonical_form(ds)


def test_canonical_form_idempotent_and_complete():
    ds = icosa()
    c = canonical_form(ds)
    assert canonical_form(c) == c
    # equivalence iff equal canonical forms, across a spread of variants
    sq = dataset(ALTERNATING, 5, 0, [
        (parse_perm("(1 2)(3 4)", 5), 2),
        parse_perm("(1 5 4 3 2)", 5) ** 2,
        parse_perm("(1 2 3 4 5)", 5) ** 2,
    ])
    mixed = dataset(ALTERNATING, 5, 0, [
        (parse_perm("(1 2)(3 4)", 5), 2),
        parse_perm("(1 5 4 3 2)", 5),
        parse_perm("(1 2 3 4 5)", 5) ** 2,
    ])
    assert canonical_form(sq) == c
    assert canonical_form(mixed) != c
    assert equivalent(ds, sq) and not equivalent(ds, mixed)


def test_printed_cubic_tuple_is_equivalent_to_the_valid_one():
    printed = parse_dataset(CUBIC_A_PRINTED, ALTERNATING)
    valid = parse_dataset(CUBIC_A_VALID, ALTERNATING)
    assert equivalent(printed, valid)
    assert canonical_form(printed) == canonical_form(valid)
    validate(valid)
    with pytest.raises(ValidationFailure):
        validate(printed)  # its entry product is not the identity


def test_distinct_table_rows_have_distinct_canonical_forms():
    a = parse_dataset("(4,0;[(2 3),2;2],[(1 2 4 3),4;4],[(1 2 3 4),4;4]^[2])", SYMMETRIC)
    b = parse_dataset("(4,0;[(1 4)(2 3),2;2,2],[(2 4),2;2],[(3 4),2;2]^[2],"
                      "[(1 2 3 4),4;4])", SYMMETRIC)
    assert canonical_form(a) != canonical_form(b)
    assert not equivalent(a, b)


def test_text_roundtrip_byte_identical():
    for text in [ICOSAHEDRAL_A, OCTAHEDRAL_A, TETRAHEDRAL_A, CUBIC_A_VALID]:
        assert format_dataset(parse_dataset(text, ALTERNATING)) == text


def test_json_roundtrip():
    ds = parse_dataset(OCTAHEDRAL_A, ALTERNATING)
    ds = GroupDataSet(ds.kind, ds.n, ds.g0, ds.entries,
                      witnesses=find_handle_witnesses(ds))
    back = dataset_from_json(dataset_to_json(ds))
    assert back == ds


def test_g0_1_witness_clause():
    ds = parse_dataset("(4,1;[(1 2)(3 4),2;2,2]^[3])", ALTERNATING)
    assert validate(ds) == 10
    stored = GroupDataSet(ds.kind, ds.n, ds.g0, ds.entries,
                          witnesses=(Perm.identity(4), Perm.identity(4)))
    with pytest.raises(ValidationFailure) as err:
        validate(stored)
    assert err.value.condition == "witness"
