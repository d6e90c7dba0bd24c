import pytest

from tetra_subgroups import words

NAMES = ("P", "Q", "R", "S")
KLEINIAN = ("a", "b", "c")


class TestFreeReduce:
    def test_cancels_inverse_pairs(self):
        assert words.free_reduce([(0, 1), (1, 1), (1, -1), (0, -1)]) == words.EMPTY
        assert words.free_reduce([(0, 1), (1, 1), (1, -1)]) == ((0, 1),)

    def test_involutions_cancel_and_lose_their_sign(self):
        involutions = frozenset({0, 1})
        assert words.free_reduce([(0, 1), (0, 1)], involutions) == words.EMPTY
        assert words.free_reduce([(1, -1), (0, 1)], involutions) == ((1, 1), (0, 1))
        assert words.free_reduce([(2, 1), (2, 1)], involutions) == ((2, 1), (2, 1))

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            words.free_reduce([(0, 2)])


def test_inverse_and_power():
    w = ((0, 1), (1, -1))
    assert words.inverse(w) == ((1, 1), (0, -1))
    assert words.concat(w, words.inverse(w)) == words.EMPTY
    assert words.power(w, 2) == w + w
    assert words.power(((0, 1),), 3) == ((0, 1), (0, 1), (0, 1))


def test_cyclic_rotations_and_find_subword():
    w = ((0, 1), (1, 1), (2, 1))
    assert words.cyclic_rotations(w) == [w, ((1, 1), (2, 1), (0, 1)), ((2, 1), (0, 1), (1, 1))]
    assert words.find_subword(w, ((1, 1), (2, 1))) == 1
    assert words.find_subword(w, ((2, 1), (0, 1))) == -1
    assert words.find_subword(w, words.EMPTY) == -1


class TestFormatting:
    def test_format_word(self):
        assert words.format_word(((3, 1), (2, 1), (3, 1)), NAMES) == "SRS"
        assert words.format_word(((0, 1), (1, -1)), KLEINIAN) == "ab⁻¹"
        assert words.format_word(words.EMPTY, NAMES) == ""

    def test_parse_word(self):
        assert words.parse_word("SRS", NAMES) == ((3, 1), (2, 1), (3, 1))
        assert words.parse_word("ab⁻¹", KLEINIAN) == ((0, 1), (1, -1))
        assert words.parse_word("a^-1 c", KLEINIAN) == ((0, -1), (2, 1))
        assert words.parse_word("aB", KLEINIAN) == ((0, 1), (1, -1))
        assert words.parse_word("ε", NAMES) == words.EMPTY

    def test_parse_reduces_freely(self):
        assert words.parse_word("abB", KLEINIAN) == ((0, 1),)

    def test_parse_rejects_unknown_generator(self):
        with pytest.raises(ValueError):
            words.parse_word("PX", NAMES)
