"""Detection, verification, lifting, and generation of decompositions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_expand
from tilescope import (
    DigitSet,
    SkewDecomposition,
    direct_sum_complete,
    expand,
    gen_product_form,
    gen_weak_product_form,
    is_tile,
    lift_stage,
    skew_decompose,
    verify_decomposition,
)

TWELVE = (0, 1, 4, 8, 9, 17, 25, 33, 41, 72, 76, 80)


class TestSkewDecompose:
    def test_product_form(self):
        dec = skew_decompose({0, 1, 8, 9}, 4, 1)
        assert dec.A == (0, 1)
        assert dec.Bs == ((0, 2), (0, 2))

    def test_twelve_digit_set(self):
        dec = skew_decompose(TWELVE, 12, 1)
        assert dec.A == (0, 1, 4, 8, 9, 17)
        blocks = dict(zip(dec.A, dec.Bs))
        assert blocks[0] == blocks[4] == blocks[8] == (0, 6)
        assert blocks[1] == blocks[9] == blocks[17] == (0, 2)

    def test_unequal_class_sizes(self):
        assert skew_decompose({0, 1, 2, 5}, 4, 1) is None

    def test_incomplete_residue_sum(self):
        # classes are balanced but {0,1} + {0,1} collides mod 4
        assert skew_decompose({0, 1, 4, 5}, 4, 1) is None

    def test_stage_two(self):
        dec = skew_decompose({0, 1, 32, 33}, 4, 2)
        assert dec == SkewDecomposition(4, 2, (0, 1), ((0, 2), (0, 2)))
        assert skew_decompose({0, 1, 32, 33}, 4, 1) is None

    def test_wrong_cardinality(self):
        with pytest.raises(ValueError, match="expected 4 values"):
            skew_decompose({0, 1, 2}, 4, 1)

    def test_representative_independence(self):
        dec = skew_decompose(TWELVE, 12, 1)
        # swap each representative for the other member of its class
        alt_a, alt_bs = [], []
        for a, b in zip(dec.A, dec.Bs):
            shift = b[-1]
            alt_a.append(a + 12 * shift)
            alt_bs.append(tuple(sorted(u - shift for u in b)))
        alt = SkewDecomposition(12, 1, tuple(alt_a), tuple(alt_bs))
        assert verify_decomposition(alt, TWELVE)

    @settings(max_examples=40)
    @given(
        st.dictionaries(
            st.tuples(st.integers(0, 1), st.sampled_from([0, 2])),
            st.integers(-2, 2),
            max_size=4,
        ),
        st.lists(st.integers(-3, 3), min_size=2, max_size=2),
    )
    def test_any_class_member_works_as_representative(self, offsets, shifts):
        d = gen_weak_product_form([0, 1], [0, 2], 1, offsets)
        dec = skew_decompose(d.digits, 4, 1)
        assert dec is not None
        # moving a_j along its class shifts B_j the other way
        alt = SkewDecomposition(
            4,
            1,
            tuple(a + 4 * t for a, t in zip(dec.A, shifts)),
            tuple(
                tuple(sorted(u - t for u in b)) for b, t in zip(dec.Bs, shifts)
            ),
        )
        assert verify_decomposition(alt, d.digits) == verify_decomposition(
            dec, d.digits
        )


class TestVerifyDecomposition:
    def test_twelve_digit_set(self):
        assert verify_decomposition(skew_decompose(TWELVE, 12, 1), TWELVE)

    def test_product_form(self):
        dec = SkewDecomposition(4, 1, (0, 1), ((0, 2), (0, 2)))
        assert verify_decomposition(dec, {0, 1, 8, 9})

    def test_incomplete_sum_rejected(self):
        dec = SkewDecomposition(4, 1, (0, 1), ((0, 1), (0, 1)))
        assert not verify_decomposition(dec, {0, 1, 4, 5})

    def test_wrong_values_rejected(self):
        dec = SkewDecomposition(4, 1, (0, 1), ((0, 2), (0, 2)))
        assert not verify_decomposition(dec, {0, 1, 8, 13})


class TestLiftStage:
    def test_single_stage_is_identity(self):
        dec = skew_decompose({0, 1, 8, 9}, 4, 1)
        assert lift_stage(dec) == dec

    def test_weak_product_identity(self):
        dec = skew_decompose({0, 1, 8, 25}, 4, 1)
        assert dec.Bs == ((0, 2), (0, 6))
        assert lift_stage(dec) == dec

    def test_two_stage_lift(self):
        d = DigitSet(4, (0, 1, 32, 33))
        lifted = lift_stage(skew_decompose(d.digits, 4, 2))
        assert lifted.base == 16 and lifted.stage == 1
        assert verify_decomposition(lifted, expand(d, 2).values)
        assert lifted == skew_decompose(expand(d, 2).values, 16, 1)

    @settings(max_examples=30)
    @given(
        st.integers(2, 3),
        st.dictionaries(
            st.tuples(st.integers(0, 5), st.integers(0, 5)),
            st.integers(0, 2),
            max_size=4,
        ),
    )
    def test_generated_two_stage_lifts(self, half, offsets):
        a = list(range(half))
        b = [half * i for i in range(half)]
        keyed = {(a[i % half], b[k % half]): v for (i, k), v in offsets.items()}
        d = gen_weak_product_form(a, b, 2, keyed)
        dec = skew_decompose(d.digits, d.base, 2)
        assert dec is not None
        lifted = lift_stage(dec)
        assert verify_decomposition(lifted, expand(d, 2).values)


class TestGenProductForm:
    def test_product_form(self):
        assert gen_product_form([[0, 1], [0, 2]], 4).digits == (0, 1, 8, 9)

    def test_standard(self):
        assert gen_product_form([list(range(6))], 6).digits == tuple(range(6))

    def test_swapped_factors(self):
        assert gen_product_form([[0, 2], [0, 1]], 4).digits == (0, 2, 4, 6)

    def test_incomplete_factors_rejected(self):
        with pytest.raises(ValueError, match="complete residue system"):
            gen_product_form([[0, 1], [0, 1]], 4)

    def test_results_are_tiles(self):
        for factors, base in [
            ([[0, 1], [0, 2]], 4),
            ([[0, 2], [0, 1]], 4),
            ([[0, 1, 2], [0, 3]], 6),
            ([[0, 1], [0, 2], [0, 4]], 8),
        ]:
            assert is_tile(gen_product_form(factors, base))[0]


class TestGenWeakProductForm:
    def test_zero_offsets_give_product_form(self):
        assert gen_weak_product_form([0, 1], [0, 2], 1).digits == (0, 1, 8, 9)

    def test_single_offset(self):
        d = gen_weak_product_form([0, 1], [0, 2], 1, {(1, 2): 1})
        assert d.digits == (0, 1, 8, 25)
        dec = skew_decompose(d.digits, 4, 1)
        assert dict(zip(dec.A, dec.Bs))[1] == (0, 6)

    def test_two_stage(self):
        assert gen_weak_product_form([0, 1], [0, 2], 2).digits == (0, 1, 32, 33)

    def test_incomplete_pair_rejected(self):
        with pytest.raises(ValueError, match="complete residue system"):
            gen_weak_product_form([0, 1], [0, 4], 2)

    @settings(max_examples=40)
    @given(
        st.integers(1, 3),
        st.dictionaries(
            st.tuples(st.integers(0, 1), st.sampled_from([0, 2])),
            st.integers(-2, 2),
            max_size=4,
        ),
    )
    def test_generated_sets_are_decomposable_tiles(self, m, offsets):
        d = gen_weak_product_form([0, 1], [0, 2], m, offsets)
        assert is_tile(d)[0]
        dec = skew_decompose(d.digits, 4, m)
        assert dec is not None and verify_decomposition(dec, d.digits)


class TestTilePropertyOfDecomposables:
    def test_stage_one_decomposition_implies_tile(self, b4_corpus):
        # sufficiency of the decomposition, checked against the automaton
        for digits in b4_corpus:
            if max(digits) > 14:
                continue
            if skew_decompose(digits, 4, 1) is not None:
                assert is_tile(DigitSet(4, digits))[0], digits

    def test_decomposition_matches_brute_expansion(self):
        d = DigitSet(4, (0, 1, 32, 33))
        values = brute_expand(d.digits, 4, 2)
        dec = skew_decompose(values, 16, 1)
        assert sorted(dec.digit_values()) == values
        assert all(direct_sum_complete(dec.A, b, 16) for b in dec.Bs)
