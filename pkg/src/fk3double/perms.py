"""The symmetric group S3: composition, conjugation, sign.

Composition convention: (g*h)(x) = g(h(x)), i.e. the right factor acts first.
Under this convention the transposition products come out as
(23)*(12) = (132) and (12)*(23) = (123).

Elements are represented as tuples (g(1), g(2), g(3)) and interned, so they
can be compared with `is`, used as dict keys, and printed in cycle notation.
"""

from __future__ import annotations

from typing import Iterable

_IDENT = (1, 2, 3)


class Perm:
    """A permutation of {1, 2, 3} in one-line notation."""

    __slots__ = ("images",)
    _pool: dict = {}

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        cached = cls._pool.get(images)
        if cached is not None:
            return cached
        if sorted(images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {images}")
        self = super().__new__(cls)
        object.__setattr__(self, "images", images)
        cls._pool[images] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # (self*other)(x) = self(other(x))
        return Perm(tuple(self.images[other.images[i] - 1] for i in range(3)))

    def inverse(self) -> "Perm":
        inv = [0, 0, 0]
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Perm(inv)

    def conj(self, other: "Perm") -> "Perm":
        """self * other * self**-1."""
        return self * other * self.inverse()

    @property
    def sign(self) -> int:
        inv = 0
        im = self.images
        for i in range(3):
            for j in range(i + 1, 3):
                if im[i] > im[j]:
                    inv += 1
        return -1 if inv % 2 else 1

    def is_identity(self) -> bool:
        return self.images == _IDENT

    def __eq__(self, other) -> bool:
        return self is other

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return CYCLE_NAMES[self]


E = Perm((1, 2, 3))
T12 = Perm((2, 1, 3))
T13 = Perm((3, 2, 1))
T23 = Perm((1, 3, 2))
C123 = Perm((2, 3, 1))  # 1->2, 2->3, 3->1
C132 = Perm((3, 1, 2))  # 1->3, 3->2, 2->1

ALL = (E, T12, T13, T23, C123, C132)
TRANSPOSITIONS = (T12, T13, T23)
THREE_CYCLES = (C123, C132)

CYCLE_NAMES = {
    E: "e",
    T12: "(12)",
    T13: "(13)",
    T23: "(23)",
    C123: "(123)",
    C132: "(132)",
}

_BY_NAME = {name: p for p, name in CYCLE_NAMES.items()}


def from_name(name: str) -> Perm:
    """Look a permutation up by its cycle-notation name, e.g. "(12)" or "e"."""
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown permutation name {name!r}") from None


def transposition(i: int, j: int) -> Perm:
    """The transposition (i j)."""
    images = [1, 2, 3]
    images[i - 1], images[j - 1] = j, i
    return Perm(images)


def pair_of(t: Perm) -> tuple[int, int]:
    """The moved pair {i < j} of a transposition."""
    fixed = [p for p in (1, 2, 3) if t(p) == p]
    if len(fixed) != 1:
        raise ValueError(f"{t} is not a transposition")
    moved = [p for p in (1, 2, 3) if p not in fixed]
    return moved[0], moved[1]
