"""The 12-dimensional quadratic quotient on three letters."""

from __future__ import annotations

from fk3double.nichols import fk3, word_index, word_s3deg, words_of_degree
from fk3double.perms import C123, E, T12, T13, T23
from fk3double.scalars import ONE, ZERO


def test_dimension_vector() -> None:
    n = fk3()
    assert n.dims[:5] == [1, 3, 4, 3, 1]
    assert n.dims[5] == 0
    assert n.top_degree == 4
    assert n.dim == 12


def test_letter_degrees() -> None:
    # letters carry the three transpositions as group degrees
    assert word_s3deg((0,)) is T12
    assert word_s3deg((1,)) is T13
    assert word_s3deg((2,)) is T23
    assert word_s3deg(()) is E
    assert word_s3deg((0, 2)) is T12 * T23


def test_top_word_is_unique_and_even() -> None:
    n = fk3()
    top = n.basis_by_degree[4]
    assert len(top) == 1
    assert word_s3deg(top[0]) in (E, C123, C123 * C123)


def test_defining_relations_vanish() -> None:
    n = fk3()
    # squares of the letters
    for letter in range(3):
        assert n.nf((letter, letter)) == {}
    # the two braided relations in degree 2
    for a, b, c in ((0, 1, 2), (0, 2, 1)):
        total: dict = {}
        for word in ((a, b), (b, c), (c, a)):
            for w, v in n.nf(word).items():
                total[w] = total.get(w, ZERO) + v
        assert all(v.is_zero() for v in total.values())


def test_normal_form_is_projection() -> None:
    n = fk3()
    for word in n.basis:
        assert n.nf(word) == {word: ONE}
    for d in range(5):
        for word in words_of_degree(d):
            nf = n.nf(word)
            for w in nf:
                assert w in n.index


def test_word_index_orders_words() -> None:
    words = words_of_degree(2)
    assert [word_index(w) for w in words] == sorted(word_index(w)
                                                    for w in words)
