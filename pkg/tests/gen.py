"""Seeded random instances shared by the test modules."""

import random
from fractions import Fraction

from rationality.core import PreferenceMatrix
from rationality.poset import poset_from_cover_pairs


def random_poset(rng: random.Random, n: int, density: float | None = None):
    density = rng.random() if density is None else density
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    pairs = [
        (perm[a], perm[b])
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < density
    ]
    return poset_from_cover_pairs(n, pairs)


def random_matrix(rng: random.Random, n: int, values=None) -> PreferenceMatrix:
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if values is None:
                den = rng.randint(1, 12)
                upper[(i, j)] = Fraction(rng.randint(0, den), den)
            else:
                upper[(i, j)] = rng.choice(values)
    return PreferenceMatrix.from_upper(n, upper)


def random_half_integral(rng: random.Random, n: int) -> PreferenceMatrix:
    return random_matrix(rng, n, [Fraction(0), Fraction(1, 2), Fraction(1)])


def random_integral(rng: random.Random, n: int) -> PreferenceMatrix:
    return random_matrix(rng, n, [Fraction(0), Fraction(1)])
