import pytest

from orbiklt import (EnumerationOverflowError, abelianization_free_rank,
                     coset_enumeration, curve_relators,
                     enumerated_curve_order)


class TestCosetEnumeration:
    def test_symmetric_group_s3(self):
        # <a, b | a^2, b^2, (ab)^3>
        rels = [(1, 1), (2, 2), (1, 2) * 3]
        assert coset_enumeration(2, rels) == 6

    def test_cyclic(self):
        for n in range(1, 12):
            assert coset_enumeration(1, [(1,) * n]) == n

    def test_quaternion_group(self):
        # <a, b | a^4, a^2 b^-2, b^-1 a b a>
        rels = [(1, 1, 1, 1), (1, 1, -2, -2), (-2, 1, 2, 1)]
        assert coset_enumeration(2, rels) == 8

    def test_trivial_group(self):
        assert coset_enumeration(1, [(1,)]) == 1

    def test_overflow_on_infinite_group(self):
        with pytest.raises(EnumerationOverflowError):
            coset_enumeration(2, [], max_cosets=500)

    def test_bad_letter_rejected(self):
        with pytest.raises(ValueError):
            coset_enumeration(1, [(2,)])


class TestCurvePresentations:
    def test_relator_shape(self):
        ngens, rels = curve_relators(1, (2,))
        assert ngens == 3
        assert rels[0] == (1, 2, -1, -2, 3)
        assert rels[1] == (3, 3)

    @pytest.mark.parametrize("mults, order", [
        ((2, 3, 5), 60),
        ((2, 3, 4), 24),
        ((2, 3, 3), 12),
        ((2, 2, 2), 4),
        ((2, 2, 9), 18),
        ((3, 3), 3),
        ((4, 6), 2),
        ((5,), 1),
        ((), 1),
    ])
    def test_genus_zero_orders(self, mults, order):
        assert enumerated_curve_order(0, mults) == order

    def test_infinite_curve_overflows(self):
        with pytest.raises(EnumerationOverflowError):
            enumerated_curve_order(1, (), max_cosets=2000)


class TestAbelianization:
    @pytest.mark.parametrize("genus, mults, rank", [
        (0, (), 0),
        (0, (5,), 0),
        (0, (2, 3, 6), 0),
        (0, (2, 2, 2, 2), 0),
        (1, (), 2),
        (1, (3,), 2),
        (2, (), 4),
    ])
    def test_free_rank(self, genus, mults, rank):
        assert abelianization_free_rank(genus, mults) == rank
