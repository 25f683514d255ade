"""The rank-3 Fomin-Kirillov algebra built degreewise from its quadratic relations.

Generators are indexed 0, 1, 2 for the letters attached to the transpositions
(12), (13), (23).  The defining relations are the three squares together with

    x12 x13 + x23 x12 + x13 x23 = 0
    x13 x12 + x12 x23 + x23 x13 = 0

The quotient is computed degree by degree: the degree-d slice of the two-sided
ideal is spanned by u * r * w over monomials u, w and defining relations r,
and a word basis of the quotient is read off from the echelon form.  No
dimensions are assumed; the expected (1, 3, 4, 3, 1) shape is asserted by the
test suite, not by this module.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import SpanBasis
from .perms import TRANSPOSITIONS, E, Perm
from .scalars import ONE, Scalar

Word = tuple  # tuple of ints in {0, 1, 2}

# each relation is a list of (word, coefficient)
_RELATIONS: list[list[tuple[Word, Scalar]]] = [
    [((0, 0), ONE)],
    [((1, 1), ONE)],
    [((2, 2), ONE)],
    [((0, 1), ONE), ((2, 0), ONE), ((1, 2), ONE)],
    [((1, 0), ONE), ((0, 2), ONE), ((2, 1), ONE)],
]

_LETTER_NAMES = ("12", "13", "23")


def word_index(word: Word) -> int:
    idx = 0
    for letter in word:
        idx = idx * 3 + letter
    return idx


def words_of_degree(d: int) -> list[Word]:
    if d == 0:
        return [()]
    out = []

    def grow(prefix):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for letter in range(3):
            prefix.append(letter)
            grow(prefix)
            prefix.pop()

    grow([])
    return out


def word_s3deg(word: Word) -> Perm:
    """Product of the letters' transpositions, left to right."""
    g = E
    for letter in word:
        g = g * TRANSPOSITIONS[letter]
    return g


def word_name(word: Word, letter: str = "x") -> str:
    if not word:
        return "1"
    return ".".join(f"{letter}{_LETTER_NAMES[i]}" for i in word)


class Nichols:
    """Normal forms and multiplication for the quadratic quotient."""

    def __init__(self, max_degree: int = 8):
        self.reducers: list[dict[int, dict]] = []  # per degree: pivot index -> row
        self.basis_by_degree: list[list[Word]] = []
        self.dims: list[int] = []
        degree = 0
        while degree <= max_degree:
            words = words_of_degree(degree)
            span = SpanBasis()
            for rel in _RELATIONS:
                rlen = len(rel[0][0])
                if rlen > degree:
                    continue
                for llen in range(degree - rlen + 1):
                    for left in words_of_degree(llen):
                        for right in words_of_degree(degree - rlen - llen):
                            vec = {}
                            for rword, coeff in rel:
                                vec[word_index(left + rword + right)] = coeff
                            span.add(vec)
            pivots = set(span.rows.keys())
            normal = [w for w in words if word_index(w) not in pivots]
            self.reducers.append(dict(span.rows))
            self.basis_by_degree.append(normal)
            self.dims.append(len(normal))
            if not normal:
                break
            degree += 1
        else:
            raise ValueError("quotient did not terminate below max_degree")
        self.top_degree = len(self.dims) - 2  # last degree with a nonzero slice
        self.basis: list[Word] = [w for deg_words in self.basis_by_degree
                                  for w in deg_words]
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._word_by_degree_index = [
            {word_index(w): w for w in words} for words in
            (words_of_degree(d) for d in range(len(self.dims) + 1))
        ]

    def nf(self, word: Word) -> dict[Word, Scalar]:
        """Normal form of a free word as {basis word: coefficient}."""
        return dict(self._nf_cached(word))

    @lru_cache(maxsize=None)
    def _nf_cached(self, word: Word):
        d = len(word)
        if d >= len(self.basis_by_degree):
            return ()
        reducers = self.reducers[d]
        vec = {word_index(word): ONE}
        for c in sorted(vec.keys()):
            val = vec.get(c)
            if val is None or val.is_zero():
                continue
            row = reducers.get(c)
            if row is None:
                continue
            for cc, rv in row.items():
                s = vec.get(cc, Scalar(0)) - val * rv
                if s.is_zero():
                    vec.pop(cc, None)
                else:
                    vec[cc] = s
        # after one pass some later columns may have been rewritten; sweep
        # until stable (reducer rows only point rightward, so this halts)
        changed = True
        while changed:
            changed = False
            for c in sorted(vec.keys()):
                val = vec.get(c)
                if val is None or val.is_zero():
                    continue
                row = reducers.get(c)
                if row is None:
                    continue
                vec.pop(c)
                for cc, rv in row.items():
                    if cc == c:
                        continue
                    s = vec.get(cc, Scalar(0)) - val * rv
                    if s.is_zero():
                        vec.pop(cc, None)
                    else:
                        vec[cc] = s
                changed = True
        lookup = self._word_by_degree_index[d]
        return tuple((lookup[c], v) for c, v in sorted(vec.items()))

    def multiply(self, u: dict, v: dict) -> dict:
        """Product of two elements given as {basis word: coefficient}."""
        out: dict[Word, Scalar] = {}
        for w1, c1 in u.items():
            for w2, c2 in v.items():
                coeff = c1 * c2
                for w, c in self._nf_cached(w1 + w2):
                    s = out.get(w, Scalar(0)) + coeff * c
                    if s.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = s
        return out

    def conjugate_word(self, g: Perm, word: Word) -> tuple[Scalar, Word]:
        """The letterwise twist g . (x_t1 ... x_tk) = sgn(g)^k x_{g t1 g^-1} ...

        Returns (sign, free word); the word still needs normal-forming.
        """
        sign = ONE if (g.sign == 1 or len(word) % 2 == 0) else Scalar(-1)
        letters = []
        for letter in word:
            t = g.conj(TRANSPOSITIONS[letter])
            letters.append(TRANSPOSITIONS.index(t))
        return sign, tuple(letters)


_FK3 = None


def fk3() -> Nichols:
    """The shared rank-3 instance (dimensions 1, 3, 4, 3, 1)."""
    global _FK3
    if _FK3 is None:
        _FK3 = Nichols()
    return _FK3
