import pytest

from wreathcenter import center as ct
from wreathcenter.errors import BudgetExceeded, NotProper, SizeMismatch
from wreathcenter.families import PartitionFamily, families_with_size, pad_family


def fam(k, *components):
    return PartitionFamily.from_components(k, components)


def test_vector_normalization():
    v = ct.ClassSumVector(1, {fam(1, (2,)): 3, fam(1, (1, 1)): 0})
    assert v.terms == {fam(1, (2,)): 3}
    assert v.context == "universal"
    with pytest.raises(SizeMismatch):
        ct.ClassSumVector(1, {fam(1, (2,)): 1}, n=3)


def test_identity_class_is_a_unit():
    for k, n in [(1, 3), (2, 2), (2, 3)]:
        ident = PartitionFamily.identity(k, n)
        for gamma in families_with_size(k, n):
            v = ct.multiply_group(ident, gamma, n)
            assert v.terms == {gamma: 1}
            assert ct.multiply_group(gamma, ident, n).terms == {gamma: 1}


def test_group_product_transpositions_n4():
    lam = fam(1, (2, 1, 1))
    v = ct.multiply_group(lam, lam, 4)
    assert v.terms == {
        fam(1, (1, 1, 1, 1)): 6,
        fam(1, (3, 1)): 3,
        fam(1, (2, 2)): 2,
    }


def test_group_product_matches_full_expansion():
    # direct convolution over all pairs, as an independent oracle
    from collections import Counter
    from wreathcenter import blockperm as bp

    n = 3
    for left in families_with_size(2, n):
        for right in families_with_size(2, n):
            xs = list(bp.enumerate_class(left, n))
            ys = list(bp.enumerate_class(right, n))
            convolution = Counter(x * y for x in xs for y in ys)
            v = ct.multiply_group(left, right, n)
            for gamma in families_with_size(2, n):
                rep = bp.class_representative(gamma, n)
                assert v.coefficient(gamma) == convolution[rep]


def test_universal_product_examples():
    v = ct.multiply_universal(fam(1, (2,)), fam(1, (2,)))
    assert v.terms == {fam(1, (1, 1)): 1, fam(1, (3,)): 3, fam(1, (2, 2)): 2}
    v = ct.multiply_universal(fam(2, (), (2,)), fam(2, (), (2,)))
    assert v.terms == {
        fam(2, (1, 1), ()): 2,
        fam(2, (), (1, 1)): 2,
        fam(2, (), (2, 2)): 2,
        fam(2, (3,), ()): 3,
    }
    v = ct.multiply_universal(fam(3, (), (1,), (1,)), fam(3, (), (), (1,)))
    assert v.terms == {
        fam(3, (), (1,), (1, 1)): 2,
        fam(3, (1,), (1,), ()): 2,
        fam(3, (), (1,), (1,)): 3,
    }


def test_universal_empty_is_a_unit():
    empty = PartitionFamily.empty(2)
    other = fam(2, (2,), (1,))
    assert ct.multiply_universal(empty, other).terms == {other: 1}


def test_universal_commutes():
    pairs = [
        (fam(1, (2,)), fam(1, (3,))),
        (fam(2, (1,), ()), fam(2, (1,), (1,))),
        (fam(2, (), (2,)), fam(2, (2,), ())),
        (fam(3, (), (1,), (1,)), fam(3, (), (1,), ())),
    ]
    for left, right in pairs:
        assert ct.multiply_universal(left, right) == ct.multiply_universal(right, left)


def test_universal_size_bounds():
    for left, right in [
        (fam(1, (2,)), fam(1, (3,))),
        (fam(2, (1,), (1,)), fam(2, (), (2,))),
    ]:
        v = ct.multiply_universal(left, right)
        for gamma in v.terms:
            assert max(left.size, right.size) <= gamma.size <= left.size + right.size


def test_filtration_subadditivity_full_sweep():
    # every product with k <= 3 and total input size <= 4, all families
    checked = 0
    for k in (1, 2, 3):
        fams = [f for s in range(5) for f in families_with_size(k, s)]
        for left in fams:
            for right in fams:
                if left.size + right.size > 4:
                    continue
                for gamma in ct.multiply_universal(left, right).terms:
                    assert max(left.size, right.size) <= gamma.size
                    assert ct.deg(gamma) <= ct.deg(left) + ct.deg(right)
                    assert ct.deg1(gamma) <= ct.deg1(left) + ct.deg1(right)
                    checked += 1
    assert checked > 1000


def test_deg_examples():
    empty = PartitionFamily.empty(2)
    assert ct.deg(empty) == ct.deg1(empty) == 0
    f = fam(2, (1, 1), (2,))
    assert ct.deg(f) == 4
    assert ct.deg1(f) == 6
    assert ct.deg1(f) - ct.deg(f) == f.m1


def test_project_drops_oversized_keys():
    v = ct.multiply_universal(fam(1, (2,)), fam(1, (2,)))
    assert ct.project(v, 1).terms == {}
    projected = ct.project(v, 2)
    assert projected.terms == {fam(1, (1, 1)): 1}


def test_project_matches_group_product():
    cases = [
        (fam(1, (2,)), fam(1, (2,)), 4),
        (fam(1, (2,)), fam(1, (3,)), 5),
        (fam(2, (), (2,)), fam(2, (), (2,)), 5),
        (fam(3, (), (1,), (1,)), fam(3, (), (1,), ()), 4),
    ]
    for left, right, n in cases:
        projected = ct.project(ct.multiply_universal(left, right), n)
        brute = ct.multiply_group(pad_family(left, n), pad_family(right, n), n)
        assert projected == brute


def test_project_requires_universal_vector():
    v = ct.multiply_group(fam(1, (2, 1)), fam(1, (2, 1)), 3)
    with pytest.raises(SizeMismatch):
        ct.project(v, 3)


def test_polynomial_structure_k1():
    lam = fam(1, (2,))
    structure = ct.polynomial_structure(lam, lam)
    empty = PartitionFamily.empty(1)
    assert structure.rows == {
        (empty, 2): 1,
        (fam(1, (3,)), 0): 3,
        (fam(1, (2, 2)), 0): 2,
    }
    for n in range(4, 9):
        assert structure.evaluate(empty, n) == n * (n - 1) // 2
        assert structure.evaluate(fam(1, (3,)), n) == 3
        assert structure.evaluate(fam(1, (2, 2)), n) == 2


def test_polynomial_structure_k3_linear_row():
    structure = ct.polynomial_structure(fam(3, (), (1,), (1,)), fam(3, (), (), (1,)))
    gamma = fam(3, (), (1,), ())
    assert structure.rows[(gamma, 1)] == 2
    for n in range(2, 7):
        assert structure.evaluate(gamma, n) == 2 * (n - 1)


def test_polynomial_structure_matches_brute_force():
    left, right = fam(2, (), (2,)), fam(2, (), (1,))
    structure = ct.polynomial_structure(left, right)
    for n in (3, 4, 5):
        brute = ct.multiply_group(pad_family(left, n), pad_family(right, n), n)
        for gamma in structure.targets():
            if gamma.size > n:
                continue
            assert structure.evaluate(gamma, n) == brute.coefficient(pad_family(gamma, n))


def test_polynomial_structure_rejects_improper():
    with pytest.raises(NotProper):
        ct.polynomial_structure(fam(1, (2, 1)), fam(1, (2,)))


def test_representative_independence_flag():
    v1 = ct.multiply_group(fam(1, (2, 1, 1)), fam(1, (2, 1, 1)), 4, verify_representative=True)
    v2 = ct.multiply_group(fam(1, (2, 1, 1)), fam(1, (2, 1, 1)), 4)
    assert v1 == v2
    u1 = ct.multiply_universal(fam(2, (), (2,)), fam(2, (), (2,)), verify_representative=True)
    u2 = ct.multiply_universal(fam(2, (), (2,)), fam(2, (), (2,)))
    assert u1 == u2


def test_threads_give_identical_results():
    left = fam(2, (1, 1, 1), (2,))
    assert ct.multiply_group(left, left, 5, threads=4) == ct.multiply_group(left, left, 5)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        ct.multiply_universal(fam(1, (2,)), fam(1, (2,)), budget=2)
    with pytest.raises(BudgetExceeded):
        ct.multiply_group(fam(1, (2, 1, 1)), fam(1, (2, 1, 1)), 4, budget=1)
