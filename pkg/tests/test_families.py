from collections import Counter
from math import comb, factorial

import pytest

from wreathcenter import blockperm as bp
from wreathcenter import partitions as pt
from wreathcenter.errors import SizeMismatch, TooSmall
from wreathcenter.families import (
    PartitionFamily,
    big_z,
    class_size,
    families_with_size,
    family_size,
    format_family,
    index_partitions,
    is_proper_family,
    pad_family,
    parse_family,
)


def fam(k, *components):
    return PartitionFamily.from_components(k, components)


def test_index_partitions_order():
    assert index_partitions(1) == ((1,),)
    assert index_partitions(2) == ((1, 1), (2,))
    assert index_partitions(3) == ((1, 1, 1), (2, 1), (3,))


def test_normalization_and_equality():
    a = PartitionFamily(2, {(1, 1): (1,), (2,): (2,)})
    b = PartitionFamily(2, {(2,): (2,), (1, 1): (1,)})
    assert a == b and hash(a) == hash(b)
    assert PartitionFamily(2) == fam(2, (), ())
    with pytest.raises(ValueError):
        PartitionFamily(2, {(1,): (1,)})


def test_family_size():
    assert family_size(fam(2, (1,), (2,))) == 3
    assert family_size(PartitionFamily.empty(3)) == 0
    assert family_size(fam(3, (1,), (2,), (2, 1))) == 6


def test_is_proper_family():
    assert is_proper_family(fam(2, (3,), (2, 1)))
    assert not is_proper_family(fam(1, (1, 1)))
    assert is_proper_family(PartitionFamily.empty(2))


def test_pad_family():
    assert pad_family(fam(1, (2,)), 4) == fam(1, (2, 1, 1))
    squeezed = fam(2, (), (2,))
    assert pad_family(squeezed, squeezed.size) == squeezed
    assert pad_family(fam(2, (), (2,)), 5) == fam(2, (1, 1, 1), (2,))
    with pytest.raises(TooSmall):
        pad_family(fam(2, (2,), (2,)), 3)


def test_big_z_small_k():
    # k=1 reduces to the plain centralizer factor
    for lam in [(2, 1), (3,), (1, 1, 1)]:
        assert big_z(fam(1, lam)) == pt.z_of(lam)
    # k=2: both key partitions have centralizer factor 2
    f = fam(2, (2, 1), (3,))
    assert big_z(f) == 2 ** 2 * pt.z_of((2, 1)) * 2 ** 1 * pt.z_of((3,))
    # k=3: factors 6, 2, 3 per component length
    g = fam(3, (1, 1), (2,), (2, 1))
    assert big_z(g) == (6 ** 2 * pt.z_of((1, 1))) * (2 * pt.z_of((2,))) * (
        3 ** 2 * pt.z_of((2, 1))
    )


def test_class_size_identity_and_total():
    for k, n in [(1, 4), (2, 3), (3, 2)]:
        assert class_size(PartitionFamily.identity(k, n), n) == 1
        total = sum(class_size(f, n) for f in families_with_size(k, n))
        assert total == factorial(k) ** n * factorial(n)
    with pytest.raises(SizeMismatch):
        class_size(fam(2, (1,), ()), 2)


def test_class_size_against_enumeration():
    # bucket the full group by type and compare each bucket with the formula
    buckets = Counter(w.type_of() for w in bp.enumerate_group(2, 3))
    for f, count in buckets.items():
        assert count == class_size(f, 3)
    f = fam(2, (1, 1, 1), (2,))
    buckets5 = Counter(w.type_of() for w in bp.enumerate_group(2, 5))
    assert buckets5[f] == class_size(f, 5)


def test_families_with_size():
    assert families_with_size(1, 2) == [fam(1, (1, 1)), fam(1, (2,))]
    assert families_with_size(2, 1) == [fam(2, (), (1,)), fam(2, (1,), ())]
    # one family per bipartition of 2; the classes of the 8-element group
    assert len(families_with_size(2, 2)) == 5
    proper = families_with_size(2, 2, proper_only=True)
    assert proper == [fam(2, (), (1, 1)), fam(2, (), (2,)), fam(2, (2,), ())]
    for k in (1, 2, 3):
        fams = families_with_size(k, 3)
        assert len(set(fams)) == len(fams)
        assert all(f.size == 3 for f in fams)


def test_big_z_padding_identity():
    for f in [fam(2, (2,), (2, 1)), fam(2, (), ()), fam(3, (2, 1), (1,), ())]:
        m1 = f.m1
        for n in range(f.size, f.size + 4):
            s = n - f.size
            expected = (
                big_z(f)
                * factorial(f.k) ** s
                * factorial(s + m1)
                // factorial(m1)
            )
            assert big_z(pad_family(f, n)) == expected


def test_partial_count_consistency():
    # the padded-class multiplicity times the padded class size is integral
    f = fam(2, (1, 1), (2,))
    n = 6
    assert comb(n - f.size + f.m1, f.m1) == comb(4, 2)


def test_text_format():
    f = PartitionFamily(2, {(1, 1): (3, 1), (2,): (2,)})
    assert format_family(f) == "{[1,1]:[3,1]; [2]:[2]}"
    assert parse_family("{[1,1]:[3,1]; [2]:[2]}", 2) == f
    assert parse_family("{[2]:[2];[1,1]:[3,1]}", 2) == f
    assert format_family(PartitionFamily.empty(3)) == "{}"
    assert parse_family("{}", 3) == PartitionFamily.empty(3)
    with pytest.raises(ValueError):
        parse_family("{[1]:[2]}", 2)
    with pytest.raises(ValueError):
        parse_family("{[2]:[1]; [2]:[1]}", 2)
    with pytest.raises(ValueError):
        parse_family("[2]:[1]", 2)
