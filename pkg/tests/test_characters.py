from fractions import Fraction
from math import factorial

import pytest

from lankelab.characters import (
    ClassFunction,
    NonCharacterError,
    class_size,
    conjugacy_classes,
    decompose,
    inner_product,
    irreducible_character,
    irreducible_class_function,
    regular_character,
    sign_character,
    trivial_character,
)
from lankelab.partitions import Partition, hook_length_dimension, partitions_of


# -- oracle: the 2-dimensional matrix model of S_3 -------------------------------


def standard_rep_s3_trace(cycle_type: Partition) -> int:
    """Trace on the hyperplane x1+x2+x3=0 from explicit 3x3 permutation matrices."""
    reps = {
        (1, 1, 1): (0, 1, 2),
        (2, 1): (1, 0, 2),
        (3,): (1, 2, 0),
    }
    perm = reps[cycle_type.parts]
    fixed = sum(1 for i, j in enumerate(perm) if i == j)
    return fixed - 1  # permutation trace minus the invariant line


def test_character_21_matches_matrix_model():
    lam = Partition((2, 1))
    for mu in partitions_of(3):
        assert irreducible_character(lam, mu) == standard_rep_s3_trace(mu)
    values = [irreducible_character(lam, mu) for mu in partitions_of(3)]
    assert sorted(values) == [-1, 0, 2]


# -- basic characters --------------------------------------------------------------


def test_trivial_character_is_all_ones():
    for mu in partitions_of(5):
        assert irreducible_character(Partition((5,)), mu) == 1


def test_sign_character():
    for mu in partitions_of(4):
        expected = (-1) ** (4 - len(mu.parts))
        assert irreducible_character(Partition((1, 1, 1, 1)), mu) == expected


def test_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        irreducible_character(Partition((2, 1)), Partition((2, 2)))


def test_class_sizes_sum_to_group_order():
    for m in range(1, 9):
        assert sum(class_size(mu) for mu in partitions_of(m)) == factorial(m)
    assert class_size(Partition((3, 1, 1))) == 20  # 5!/(3*2)


# -- orthogonality ------------------------------------------------------------------


def test_orthonormality_m5():
    chars = {lam: irreducible_class_function(lam) for lam in partitions_of(5)}
    for lam, f in chars.items():
        for mu, g in chars.items():
            expected = Fraction(1) if lam == mu else Fraction(0)
            assert inner_product(f, g) == expected


def test_column_orthogonality_m6():
    classes = conjugacy_classes(6)
    lams = partitions_of(6)
    for c1 in classes:
        for c2 in classes:
            total = sum(
                irreducible_character(lam, c1.cycle_type) * irreducible_character(lam, c2.cycle_type)
                for lam in lams
            )
            if c1.cycle_type == c2.cycle_type:
                assert total == factorial(6) // c1.size
            else:
                assert total == 0


def test_dimension_identity():
    for m in range(1, 9):
        dims = [irreducible_character(lam, Partition((1,) * m)) for lam in partitions_of(m)]
        assert all(d == hook_length_dimension(lam) for d, lam in zip(dims, partitions_of(m)))
        assert sum(d * d for d in dims) == factorial(m)


def test_regular_character_decomposition():
    reg = regular_character(4)
    for lam in partitions_of(4):
        assert inner_product(reg, irreducible_class_function(lam)) == hook_length_dimension(lam)


# -- decompose ------------------------------------------------------------------------


def test_decompose_linear_combination():
    f = irreducible_class_function(Partition((3, 1))) + irreducible_class_function(
        Partition((2, 2))
    ).scale(2)
    assert decompose(f) == {Partition((3, 1)): 1, Partition((2, 2)): 2}


def test_decompose_permutation_character_of_regular_action():
    assert decompose(regular_character(3)) == {
        Partition((3,)): 1,
        Partition((2, 1)): 2,
        Partition((1, 1, 1)): 1,
    }


def test_decompose_rejects_non_characters():
    f = trivial_character(3).scale(Fraction(1, 2))
    with pytest.raises(NonCharacterError):
        decompose(f)
    g = trivial_character(3) - sign_character(3).scale(2)
    with pytest.raises(NonCharacterError):
        decompose(g)


def test_class_function_arity_checks():
    with pytest.raises(ValueError):
        inner_product(trivial_character(3), trivial_character(4))
    with pytest.raises(ValueError):
        ClassFunction(3, {Partition((4,)): Fraction(1)})
