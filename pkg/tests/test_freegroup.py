import pytest
from hypothesis import given, settings, strategies as st

from spherebraid.freegroup import (
    BudgetExceededError,
    EndoOnBasis,
    FreeWord,
    apply_endo,
    artin_disk_endo,
    compose_endo,
    eq_Bn,
    identity_endo,
    reduce,
)
from spherebraid.words import BraidWord, named_element, permutation


def FW(rank, *letters):
    return FreeWord(rank, tuple(letters))


def braid_letters(n, max_len=25):
    alphabet = [k for k in range(-(n - 1), n) if k != 0]
    return st.lists(st.sampled_from(alphabet), max_size=max_len)


class TestReduce:
    def test_inverse_pair(self):
        assert reduce([1, -1], 2).letters == ()

    def test_nested_cancellation(self):
        assert reduce([1, 2, -2, -1, 3], 3).letters == (3,)

    def test_already_reduced(self):
        assert reduce([1, 2, 1], 2).letters == (1, 2, 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            reduce([3], 2)

    def test_freeword_rejects_unreduced(self):
        with pytest.raises(ValueError):
            FW(2, 1, -1)

    def test_freeword_text_syntax_matches_braid_words(self):
        assert FW(3, 1, -2, 3).to_text() == "1 -2 3"
        assert FW(3).to_text() == ""


SWAP = EndoOnBasis(2, (FW(2, 1, 2, -1), FW(2, 1)))  # the sigma_1 action on rank 2


class TestApplyEndo:
    def test_identity(self):
        w = FW(3, 1, -2, 3)
        assert apply_endo(identity_endo(3), w) == w

    def test_positive_letter(self):
        assert apply_endo(SWAP, FW(2, 2)).letters == (1,)

    def test_inverse_letter_inverts_image(self):
        assert apply_endo(SWAP, FW(2, -1)).letters == (1, -2, -1)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            apply_endo(SWAP, FW(3, 1))


class TestComposeEndo:
    def test_identity_neutral(self):
        assert compose_endo(SWAP, identity_endo(2)) == SWAP
        assert compose_endo(identity_endo(2), SWAP) == SWAP

    def test_inverse_pair_cancels(self):
        inv = EndoOnBasis(2, (FW(2, 2), FW(2, -2, 1, 2)))  # sigma_1^-1 action
        assert compose_endo(SWAP, inv).is_identity()
        assert compose_endo(inv, SWAP).is_identity()

    def test_square_of_generator_action(self):
        sq = compose_endo(SWAP, SWAP)
        assert sq.images[0].letters == (1, 2, 1, -2, -1)
        assert sq.images[1].letters == (1, 2, -1)


class TestArtinDiskEndo:
    def test_empty_word(self):
        assert artin_disk_endo(BraidWord(4)).is_identity()

    def test_single_generator_b2(self):
        e = artin_disk_endo(BraidWord(2, (1,)))
        assert e == SWAP

    def test_braid_relation_word_acts_trivially(self):
        w = BraidWord(3, (1, 2, 1, -2, -1, -2))
        assert artin_disk_endo(w).is_identity()

    def test_relations_exhaustive_small_n(self):
        for n in range(3, 9):
            for i in range(1, n - 1):
                lhs = BraidWord(n, (i, i + 1, i))
                rhs = BraidWord(n, (i + 1, i, i + 1))
                assert artin_disk_endo(lhs) == artin_disk_endo(rhs)
            for i in range(1, n):
                for j in range(i + 2, n):
                    lhs = BraidWord(n, (i, j))
                    rhs = BraidWord(n, (j, i))
                    assert artin_disk_endo(lhs) == artin_disk_endo(rhs)

    @given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), braid_letters(n), braid_letters(n))))
    @settings(max_examples=50, deadline=None)
    def test_action_is_multiplicative(self, data):
        n, lu, lv = data
        u, v = BraidWord(n, tuple(lu)), BraidWord(n, tuple(lv))
        assert artin_disk_endo(u * v) == compose_endo(artin_disk_endo(u), artin_disk_endo(v))

    @given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), braid_letters(n))))
    @settings(max_examples=60, deadline=None)
    def test_images_are_conjugates_of_permuted_basis(self, data):
        n, letters = data
        w = BraidWord(n, tuple(letters))
        e = artin_disk_endo(w)
        perm = permutation(w)
        for j, img in enumerate(e.images, start=1):
            core = list(img.letters)
            while len(core) >= 3 and core[0] == -core[-1]:
                core = core[1:-1]
            assert core == [perm(j)]

    def test_budget_abort(self):
        w = named_element("half_twist", 6) ** 4
        with pytest.raises(BudgetExceededError):
            artin_disk_endo(w, max_image_letters=3)


class TestEqBn:
    def test_reflexive(self):
        w = BraidWord(4, (1, -2, 3))
        assert eq_Bn(w, w)

    def test_half_twist_square_is_full_twist(self):
        x = named_element("half_twist", 4)
        assert eq_Bn(x * x, named_element("full_twist", 4))

    def test_sigma12_neq_sigma21(self):
        assert not eq_Bn(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))

    def test_strand_count_mismatch(self):
        from spherebraid.words import StrandCountMismatchError

        with pytest.raises(StrandCountMismatchError):
            eq_Bn(BraidWord(3, (1,)), BraidWord(4, (1,)))
